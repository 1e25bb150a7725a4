use std::fmt;
use std::sync::Arc;

use super::{build_pg3, build_w3, grassmann, FormsGraph, Graph};
use crate::algebra::FiniteField;
use crate::{Budget, Error, Result};

/// Parsed graph spec string such as `"hamming:n=8,q=2"`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphSpec {
    pub family: String,
    /// Parameters in the family's canonical order.
    pub params: Vec<(String, u64)>,
}

fn param_names(family: &str) -> Option<&'static [&'static str]> {
    Some(match family {
        "hamming" => &["n", "q"],
        "johnson" | "kneser" => &["v", "k"],
        "cycle" => &["m"],
        "forms" => &["m", "n", "q"],
        "grassmann" => &["d", "k", "q"],
        "w3" | "pg3" => &["q"],
        _ => return None,
    })
}

impl GraphSpec {
    pub fn parse(text: &str) -> Result<Self> {
        let text: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let (family, rest) = text.split_once(':').unwrap_or((&text, ""));
        let family = family.to_ascii_lowercase();
        let names = param_names(&family).ok_or_else(|| Error::Parse(format!("unknown graph family {family:?}")))?;
        let mut given: Vec<(String, u64)> = Vec::new();
        for kv in rest.split(',').filter(|s| !s.is_empty()) {
            let (k, v) = kv.split_once('=').ok_or_else(|| Error::Parse(format!("expected key=value, got {kv:?}")))?;
            let v: u64 = v.parse().map_err(|_| Error::Parse(format!("bad value in {kv:?}")))?;
            if !names.contains(&k) {
                return Err(Error::Parse(format!("unknown parameter {k:?} for {family}")));
            }
            if given.iter().any(|(g, _)| g == k) {
                return Err(Error::Parse(format!("repeated parameter {k:?}")));
            }
            given.push((k.to_string(), v));
        }
        let params = names
            .iter()
            .map(|&n| {
                given.iter().find(|(g, _)| g == n).map(|(_, v)| (n.to_string(), *v)).ok_or_else(|| {
                    Error::Parse(format!("missing parameter {n:?} for {family}"))
                })
            })
            .collect::<Result<_>>()?;
        Ok(GraphSpec { family, params })
    }

    pub fn get(&self, name: &str) -> u64 {
        self.params.iter().find(|(n, _)| n == name).map(|(_, v)| *v).expect("validated parameter")
    }

    pub fn build(&self, budget: &Budget) -> Result<Graph> {
        let g = |n: &str| self.get(n) as usize;
        match self.family.as_str() {
            "hamming" => Graph::hamming(g("n"), g("q")),
            "johnson" => Graph::johnson(g("v"), g("k")),
            "kneser" => Graph::kneser(g("v"), g("k")),
            "cycle" => Graph::cycle(g("m")),
            "forms" => {
                let f = Arc::new(FiniteField::of_order(g("q") as u32)?);
                Ok(Graph::Forms(FormsGraph::new(g("m"), g("n"), f)?))
            }
            "grassmann" => grassmann(g("q") as u32, g("d"), g("k"), budget.exhaustive_vertices),
            "w3" => Ok(build_w3(g("q") as u32)?.incidence_graph()),
            "pg3" => Ok(build_pg3(g("q") as u32)?.incidence_graph()),
            f => Err(Error::Parse(format!("unknown graph family {f:?}"))),
        }
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.family)?;
        for (i, (k, v)) in self.params.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{k}={v}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for GraphSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        GraphSpec::parse(s)
    }
}
