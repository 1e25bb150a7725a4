//! Code and group sources as given on the command line.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::Arc;

use gcw::battery::reed_muller_quotient_instance;
use gcw::codecore::{parse_code_text, parse_linear_descriptor, Code};
use gcw::constructions::{
    builtin_group, classical_code, cycle_code, cycle_code_group, gabidulin, grm, hamming_code, kneser_int, prm, regular_spread_code,
    repetition, shipped_sl2_subgroup, shipped_twisted_pair, spread_group, partial_ovoid_group, tetrahedron_code, tetrahedron_group,
    twisted_permutation_code, w3_partial_ovoid, Representation, BUILTIN_GROUPS,
};
use gcw::graphs::{Graph, GraphSpec};
use gcw::symmetry::{ambient_group, parse_group_json, AutRepresentation};
use gcw::{Budget, Error, Result};

/// A construction expression `family:key=value,...` with keys in canonical
/// order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Construction {
    pub family: String,
    pub params: Vec<(String, String)>,
}

/// Families with their parameter names in canonical order.
pub const CONSTRUCTIONS: [(&str, &[&str]); 11] = [
    ("rep", &["n", "q"]),
    ("grm", &["q", "k", "t"]),
    ("prm", &["q", "k", "t"]),
    ("hamming", &["q", "t"]),
    ("cycle", &["n"]),
    ("kneser_int", &["a", "b", "c", "d"]),
    ("tetrahedron", &[]),
    ("regular_spread", &["q"]),
    ("w3_partial_ovoid", &["q"]),
    ("gabidulin", &["q", "n", "k", "s"]),
    ("twisted", &["group"]),
];

impl FromStr for Construction {
    type Err = Error;
    fn from_str(text: &str) -> Result<Self> {
        let text: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let (family, rest) = text.split_once(':').unwrap_or((&text, ""));
        let names = CONSTRUCTIONS
            .iter()
            .find(|(f, _)| *f == family)
            .map(|(_, names)| *names)
            .ok_or_else(|| Error::Parse(format!("unknown construction {family:?}")))?;
        let mut given = Vec::new();
        for kv in rest.split(',').filter(|s| !s.is_empty()) {
            let (k, v) = kv.split_once('=').ok_or_else(|| Error::Parse(format!("expected key=value, got {kv:?}")))?;
            if !names.contains(&k) {
                return Err(Error::Parse(format!("unknown parameter {k:?} for {family}")));
            }
            if given.iter().any(|(g, _): &(String, String)| g == k) {
                return Err(Error::Parse(format!("repeated parameter {k:?}")));
            }
            given.push((k.to_string(), v.to_string()));
        }
        let params = names
            .iter()
            .map(|&n| {
                given
                    .iter()
                    .find(|(g, _)| g == n)
                    .cloned()
                    .ok_or_else(|| Error::Parse(format!("missing parameter {n:?} for {family}")))
            })
            .collect::<Result<_>>()?;
        Ok(Construction { family: family.to_string(), params })
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.family)?;
        for (i, (k, v)) in self.params.iter().enumerate() {
            write!(f, "{}{k}={v}", if i == 0 { ":" } else { "," })?;
        }
        Ok(())
    }
}

impl Construction {
    fn text(&self, name: &str) -> &str {
        &self.params.iter().find(|(k, _)| k == name).expect("validated parameter").1
    }

    fn number<T: FromStr>(&self, name: &str) -> Result<T> {
        let v = self.text(name);
        v.parse().map_err(|_| Error::Parse(format!("{name}={v:?} is not a number")))
    }

    pub fn build(&self, budget: &Budget) -> Result<Code> {
        let code = match self.family.as_str() {
            "rep" => repetition(self.number("n")?, self.number("q")?),
            "grm" => grm(self.number("q")?, self.number("k")?, self.number("t")?),
            "prm" => prm(self.number("q")?, self.number("k")?, self.number("t")?),
            "hamming" => hamming_code(self.number("q")?, self.number("t")?),
            "cycle" => cycle_code(self.number("n")?),
            "kneser_int" => kneser_int(self.number("a")?, self.number("b")?, self.number("c")?, self.number("d")?),
            "tetrahedron" => tetrahedron_code(),
            "regular_spread" => regular_spread_code(self.number("q")?),
            "w3_partial_ovoid" => w3_partial_ovoid(self.number("q")?),
            "gabidulin" => gabidulin(self.number("q")?, self.number("n")?, self.number("k")?, self.number("s")?),
            "twisted" => {
                let (t, rho) = shipped_twisted_pair(self.text("group"), budget)?;
                twisted_permutation_code(&t, &[Representation::natural(&t), rho], budget)
            }
            f => Err(Error::Parse(format!("unknown construction {f:?}"))),
        }?;
        Ok(code.with_name(&self.to_string()))
    }
}

/// Where a code comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CodeSource {
    Catalog(String),
    File(PathBuf),
    Construction(Construction),
}

impl FromStr for CodeSource {
    type Err = Error;
    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        match text.split_once(':') {
            Some(("catalog", name)) => Ok(CodeSource::Catalog(name.trim().to_string())),
            Some(("file", path)) => Ok(CodeSource::File(PathBuf::from(path))),
            Some(("construction", expr)) => Ok(CodeSource::Construction(expr.parse()?)),
            _ => Err(Error::Parse(format!("code source {text:?} must start with catalog:, file: or construction:"))),
        }
    }
}

impl fmt::Display for CodeSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CodeSource::Catalog(name) => write!(f, "catalog:{name}"),
            CodeSource::File(path) => write!(f, "file:{}", path.display()),
            CodeSource::Construction(c) => write!(f, "construction:{c}"),
        }
    }
}

/// The `# graph: <spec>` header written by `construct`.
fn header_graph(text: &str) -> Option<&str> {
    text.lines().filter_map(|l| l.trim().strip_prefix('#')).find_map(|l| l.trim().strip_prefix("graph:")).map(str::trim)
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

impl CodeSource {
    /// Loads the code; `graph` is required for label files without a
    /// header and must agree with the host of catalog and constructed codes.
    pub fn load(&self, graph: Option<&GraphSpec>, budget: &Budget) -> Result<Code> {
        let code = match self {
            CodeSource::Catalog(name) => classical_code(name)?,
            CodeSource::Construction(c) => c.build(budget)?,
            CodeSource::File(path) => {
                let text = read(path)?;
                if text.trim_start().starts_with('{') {
                    parse_linear_descriptor(&text)?
                } else {
                    let spec = match (graph, header_graph(&text)) {
                        (Some(g), _) => g.clone(),
                        (None, Some(h)) => GraphSpec::parse(h)?,
                        (None, None) => {
                            return Err(Error::Parse(format!("{}: no --graph given and no '# graph:' header", path.display())))
                        }
                    };
                    parse_code_text(Arc::new(spec.build(budget)?), &text)?
                }
            }
        };
        if let Some(g) = graph {
            if g.to_string() != code.graph().spec() {
                return Err(Error::Parse(format!("--graph {g} disagrees with the code's host {}", code.graph().spec())));
            }
        }
        Ok(code)
    }
}

/// Where a group comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSource {
    Builtin(String),
    File(PathBuf),
}

/// Builtin names beyond the shipped groups, resolved against the host.
pub const HOST_GROUPS: [(&str, &str); 7] = [
    ("ambient", "full automorphism group of the host graph"),
    ("cycle_code", "stabilizer of the cycle code in the dihedral group"),
    ("regular_spread", "spread stabilizer on the PG(3,q) incidence graph"),
    ("w3_partial_ovoid", "diagonal SL_2 subgroup on the W(3,q) incidence graph"),
    ("tetrahedron", "AGL_3(2) × S_5 on the 13-point set"),
    ("rm13_affine", "T_V ⋊ AGL_3(2) on H(8,2)"),
    ("rm13_translations", "translations by RM(1,3) on H(8,2)"),
];

impl FromStr for GroupSource {
    type Err = Error;
    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        match text.split_once(':') {
            Some(("builtin", name)) => {
                let known = BUILTIN_GROUPS.iter().chain(HOST_GROUPS.iter()).any(|(n, _)| *n == name);
                if !known {
                    return Err(Error::Parse(format!("unknown builtin group {name:?}")));
                }
                Ok(GroupSource::Builtin(name.to_string()))
            }
            Some(("file", path)) => Ok(GroupSource::File(PathBuf::from(path))),
            _ => Err(Error::Parse(format!("group source {text:?} must start with builtin: or file:"))),
        }
    }
}

impl fmt::Display for GroupSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSource::Builtin(name) => write!(f, "builtin:{name}"),
            GroupSource::File(path) => write!(f, "file:{}", path.display()),
        }
    }
}

fn host_param(graph: &Graph, name: &str) -> Result<usize> {
    let spec = GraphSpec::parse(&graph.spec())?;
    match spec.params.iter().find(|(k, _)| k == name) {
        Some((_, v)) => Ok(*v as usize),
        None => Err(Error::InvalidParameter(format!("host {} has no parameter {name}", graph.spec()))),
    }
}

impl GroupSource {
    pub fn load(&self, graph: &Graph) -> Result<AutRepresentation> {
        match self {
            GroupSource::File(path) => parse_group_json(&read(path)?),
            GroupSource::Builtin(name) => {
                let hamming_n = || graph.as_hamming().map(|h| h.n);
                Ok(match name.as_str() {
                    "ambient" => ambient_group(graph)?,
                    "cycle_code" => AutRepresentation::Vertex(cycle_code_group(host_param(graph, "m")? / 2)?),
                    "regular_spread" => AutRepresentation::Vertex(spread_group(host_param(graph, "q")? as u32)?),
                    "w3_partial_ovoid" => {
                        let q = host_param(graph, "q")? as u32;
                        let gens = shipped_sl2_subgroup(q).ok_or_else(|| Error::InvalidParameter(format!("no shipped SL_2({q}) subgroup")))?;
                        AutRepresentation::Vertex(partial_ovoid_group(q, &gens)?)
                    }
                    "tetrahedron" => AutRepresentation::UnderlyingSet(tetrahedron_group()?),
                    "rm13_affine" => reed_muller_quotient_instance()?.1,
                    "rm13_translations" => AutRepresentation::wreath(reed_muller_quotient_instance()?.2, 2),
                    other => AutRepresentation::wreath(builtin_group(other, hamming_n())?, 2),
                })
            }
        }
    }
}
