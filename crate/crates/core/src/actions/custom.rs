//! Finite graphs with an explicit group of automorphisms given by generating permutations.

use std::collections::HashMap;
use std::io::Read;

use serde::Deserialize;

use super::word::{Alphabet, Factor, Word};
use crate::error::{LabError, Result};
use crate::graph::{BallGraph, VertexId};

const MAX_GROUP_ORDER: usize = 100_000;

/// A permutation group acting on a finite graph, enumerated once by closure.
#[derive(Debug)]
pub struct CustomAction {
    graph: BallGraph,
    alphabet: Alphabet,
    perms: Vec<Vec<u32>>,
    inverses: Vec<Vec<u32>>,
    elements: Vec<Vec<u32>>,
    words: Vec<Word>,
    lookup: HashMap<Vec<u32>, usize>,
}

fn compose(p: &[u32], q: &[u32]) -> Vec<u32> {
    q.iter().map(|&v| p[v as usize]).collect()
}

impl CustomAction {
    /// `generators` maps a letter to the image of each vertex.
    pub fn new(graph: BallGraph, generators: Vec<(char, Vec<u32>)>) -> Result<Self> {
        let n = graph.len();
        let alphabet = Alphabet::new(generators.iter().map(|(c, _)| Factor::infinite(*c)).collect())?;
        let mut perms = Vec::new();
        for (c, p) in generators {
            if p.len() != n {
                return Err(LabError::InvalidArgument(format!("permutation `{c}` has wrong length")));
            }
            let mut seen = vec![false; n];
            for &v in &p {
                if v as usize >= n || std::mem::replace(&mut seen[v as usize], true) {
                    return Err(LabError::InvalidArgument(format!("`{c}` is not a bijection")));
                }
            }
            for (u, v) in graph.edges() {
                let (pu, pv) = (VertexId(p[u.index()]), VertexId(p[v.index()]));
                if !graph.neighbors(pu).contains(&pv) {
                    return Err(LabError::InvalidArgument(format!(
                        "`{c}` does not preserve edge {}-{}",
                        graph.label(u),
                        graph.label(v)
                    )));
                }
            }
            perms.push(p);
        }
        let inverses = perms
            .iter()
            .map(|p| {
                let mut inv = vec![0; n];
                for (i, &v) in p.iter().enumerate() {
                    inv[v as usize] = i as u32;
                }
                inv
            })
            .collect::<Vec<_>>();

        // Breadth-first closure; the first word reaching an element is shortlex least.
        let id: Vec<u32> = (0..n as u32).collect();
        let mut elements = vec![id.clone()];
        let mut words = vec![Word::identity()];
        let mut lookup = HashMap::from([(id, 0usize)]);
        let mut head = 0;
        while head < elements.len() {
            for g in alphabet.generators() {
                let s = g.syllables()[0];
                let p = if s.exp > 0 { &perms[s.factor as usize] } else { &inverses[s.factor as usize] };
                let next = compose(&elements[head], p);
                if !lookup.contains_key(&next) {
                    if elements.len() >= MAX_GROUP_ORDER {
                        return Err(LabError::ResourceLimit {
                            count: elements.len() + 1,
                            cap: MAX_GROUP_ORDER,
                        });
                    }
                    lookup.insert(next.clone(), elements.len());
                    words.push(alphabet.mul(&words[head], &g));
                    elements.push(next);
                }
            }
            head += 1;
        }
        Ok(CustomAction {
            graph,
            alphabet,
            perms,
            inverses,
            elements,
            words,
            lookup,
        })
    }

    pub fn graph(&self) -> &BallGraph {
        &self.graph
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Canonical words of all group elements in shortlex order.
    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub(crate) fn perm_of(&self, w: &Word) -> Vec<u32> {
        let mut acc: Vec<u32> = (0..self.graph.len() as u32).collect();
        for (f, s) in self.alphabet.letters(w) {
            let p = if s > 0 { &self.perms[f as usize] } else { &self.inverses[f as usize] };
            acc = compose(&acc, p);
        }
        acc
    }

    pub fn canonical(&self, w: &Word) -> Word {
        self.words[self.lookup[&self.perm_of(w)]].clone()
    }

    pub fn act(&self, w: &Word, v: u32) -> u32 {
        let mut v = v;
        for (f, s) in self.alphabet.letters(w).into_iter().rev() {
            v = if s > 0 { self.perms[f as usize][v as usize] } else { self.inverses[f as usize][v as usize] };
        }
        v
    }
}

#[derive(Deserialize)]
struct PermRow {
    generator: String,
    from: String,
    to: String,
}

/// Reads `generator,from,to` rows; vertices a generator does not mention are fixed.
pub fn read_permutation_csv<R: Read>(reader: R, graph: &BallGraph) -> Result<Vec<(char, Vec<u32>)>> {
    let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
    let mut out: Vec<(char, Vec<u32>)> = Vec::new();
    for row in rdr.deserialize() {
        let row: PermRow = row?;
        let mut chars = row.generator.chars();
        let c = match (chars.next(), chars.next()) {
            (Some(c), None) => c,
            _ => return Err(LabError::Parse(format!("generator name `{}` must be one letter", row.generator))),
        };
        let from = graph.vertex(&row.from)?.0;
        let to = graph.vertex(&row.to)?.0;
        let idx = match out.iter().position(|(d, _)| *d == c) {
            Some(i) => i,
            None => {
                out.push((c, (0..graph.len() as u32).collect()));
                out.len() - 1
            }
        };
        out[idx].1[from as usize] = to;
    }
    Ok(out)
}
