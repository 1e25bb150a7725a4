//! Group input files.

use serde::{Deserialize, Serialize};

use super::AutRepresentation;
use crate::algebra::{Perm, PermGroup};
use crate::constructions::{incidence_perm_semilinear, wreath_group, WreathElement};
use crate::graphs::{build_pg3, build_w3};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WreathGeneratorJson {
    /// One alphabet permutation per entry.
    pub base: Vec<Vec<u32>>,
    pub top: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixGeneratorJson {
    pub entries: Vec<Vec<u32>>,
    #[serde(default)]
    pub frobenius_power: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Geometry {
    Pg3,
    W3,
}

/// A group file: a representation tag and generators in that
/// representation. Permutations are image lists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "representation", rename_all = "snake_case")]
pub enum GroupJson {
    Wreath { n: usize, q: usize, generators: Vec<WreathGeneratorJson> },
    Set { degree: usize, generators: Vec<Vec<u32>> },
    Vertex { degree: usize, generators: Vec<Vec<u32>> },
    /// Semilinear maps of GF(q)^4, compiled to incidence-graph vertex
    /// permutations.
    Matrix { geometry: Geometry, q: u32, generators: Vec<MatrixGeneratorJson> },
}

fn perms(degree: usize, images: &[Vec<u32>]) -> Result<Vec<Perm>> {
    images
        .iter()
        .map(|p| {
            let p = Perm::from_images(p.clone())?;
            if p.degree() != degree {
                return Err(Error::DegreeMismatch(p.degree(), degree));
            }
            Ok(p)
        })
        .collect()
}

impl GroupJson {
    pub fn compile(&self) -> Result<AutRepresentation> {
        Ok(match self {
            GroupJson::Wreath { n, q, generators } => {
                let elements = generators
                    .iter()
                    .map(|g| WreathElement::new(perms(*q, &g.base)?, perms(*n, std::slice::from_ref(&g.top))?.remove(0)))
                    .collect::<Result<Vec<_>>>()?;
                AutRepresentation::wreath(wreath_group(*n, *q, &elements)?, *q)
            }
            GroupJson::Set { degree, generators } => AutRepresentation::UnderlyingSet(group(*degree, generators)?),
            GroupJson::Vertex { degree, generators } => AutRepresentation::Vertex(group(*degree, generators)?),
            GroupJson::Matrix { geometry, q, generators } => {
                let s = match geometry {
                    Geometry::Pg3 => build_pg3(*q)?,
                    Geometry::W3 => build_w3(*q)?,
                };
                let gens = generators
                    .iter()
                    .map(|m| incidence_perm_semilinear(&s, &m.entries, m.frobenius_power))
                    .collect::<Result<Vec<_>>>()?;
                AutRepresentation::Vertex(PermGroup::new(s.points + s.num_lines(), gens)?)
            }
        })
    }
}

fn group(degree: usize, generators: &[Vec<u32>]) -> Result<PermGroup> {
    let gens = perms(degree, generators)?;
    if gens.is_empty() {
        return Ok(PermGroup::trivial(degree));
    }
    PermGroup::new(degree, gens)
}

pub fn parse_group_json(text: &str) -> Result<AutRepresentation> {
    serde_json::from_str::<GroupJson>(text)?.compile()
}
