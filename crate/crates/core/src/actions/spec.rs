//! JSON group specifications.

use std::fs::File;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::action::{Geometry, GroupAction};
use super::custom::{read_permutation_csv, CustomAction};
use super::word::Factor;
use crate::error::{LabError, Result};
use crate::graph::io::read_adjacency_csv;
use crate::graph::{BallGraph, BallLimits};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case", deny_unknown_fields)]
pub enum GroupSpec {
    Free {
        rank: usize,
        #[serde(default)]
        geometry: Geometry,
    },
    FreeProduct {
        factors: Vec<Factor>,
        #[serde(default)]
        geometry: Geometry,
    },
    Custom {
        /// Adjacency CSV with header `u,v`.
        edges: PathBuf,
        /// Permutation CSV with header `generator,from,to`.
        automorphisms: Option<PathBuf>,
        basepoint: String,
    },
}

impl GroupSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// Builds the action; relative paths resolve against `base`.
    pub fn build(&self, base: &Path) -> Result<GroupAction> {
        match self {
            GroupSpec::Free { rank, geometry } => GroupAction::free(*rank)?.with_geometry(*geometry),
            GroupSpec::FreeProduct { factors, geometry } => {
                GroupAction::free_product(factors.clone())?.with_geometry(*geometry)
            }
            GroupSpec::Custom {
                edges,
                automorphisms,
                basepoint,
            } => {
                let (labels, es) = read_adjacency_csv(File::open(base.join(edges))?)?;
                let bp = labels
                    .iter()
                    .position(|l| l == basepoint)
                    .ok_or_else(|| LabError::UnknownVertex(basepoint.clone()))?;
                let graph = BallGraph::from_edges(labels, &es, bp, None, BallLimits::default())?;
                let gens = match automorphisms {
                    Some(p) => read_permutation_csv(File::open(base.join(p))?, &graph)?,
                    None => Vec::new(),
                };
                Ok(GroupAction::custom(CustomAction::new(graph, gens)?))
            }
        }
    }
}
