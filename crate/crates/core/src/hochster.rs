//! Multigraded Betti numbers of `R/I` for square-free monomial ideals via
//! Hochster's formula
//!
//! ```text
//! beta_{i,sigma}(R/I) = dim H~_{|sigma| - i - 1}(Delta(I)|_sigma ; GF(p))
//! ```
//!
//! where `Delta(I)` is the Stanley-Reisner complex. Only multidegrees that
//! are unions of generator supports can carry a nonzero Betti number, so
//! those are the only restrictions enumerated.

use std::collections::{BTreeMap, HashMap, HashSet};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::ring::PrimeField;

/// Default limit on the number of variables that occur in the ideal.
pub const DEFAULT_VARIABLE_CAP: usize = 16;

/// Largest cap the bitmask representation supports.
pub const MAX_VARIABLE_CAP: usize = 63;

/// A finite simplicial complex on the vertex labels `vertices`.
///
/// Faces are bitmasks over positions in `vertices`. The void complex (no
/// faces) is distinguished from `{∅}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<u32>,
    /// `faces[k]` holds the faces of dimension `k - 1`, sorted.
    faces: Vec<Vec<u64>>,
}

impl SimplicialComplex {
    /// The complex whose faces are all subsets of the given facets.
    pub fn from_facets(facets: &[Vec<u32>]) -> Self {
        let mut vertices: Vec<u32> = facets.iter().flatten().copied().collect();
        vertices.sort_unstable();
        vertices.dedup();
        assert!(vertices.len() <= MAX_VARIABLE_CAP, "too many vertices");
        let pos: HashMap<u32, usize> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut all: HashSet<u64> = HashSet::new();
        for facet in facets {
            let mask = facet.iter().fold(0u64, |acc, v| acc | (1 << pos[v]));
            // every submask of the facet
            let mut sub = mask;
            loop {
                all.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & mask;
            }
        }
        SimplicialComplex::from_faces(vertices, all.into_iter())
    }

    fn from_faces(vertices: Vec<u32>, faces: impl Iterator<Item = u64>) -> Self {
        let mut by_dim: Vec<Vec<u64>> = Vec::new();
        for f in faces {
            let k = f.count_ones() as usize;
            if by_dim.len() <= k {
                by_dim.resize(k + 1, Vec::new());
            }
            by_dim[k].push(f);
        }
        for layer in &mut by_dim {
            layer.sort_unstable();
        }
        SimplicialComplex {
            vertices,
            faces: by_dim,
        }
    }

    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    pub fn is_void(&self) -> bool {
        self.faces.iter().all(Vec::is_empty)
    }

    /// Dimension of the complex; `-1` for `{∅}` and `None` for the void complex.
    pub fn dimension(&self) -> Option<i64> {
        self.faces.iter().rposition(|l| !l.is_empty()).map(|k| k as i64 - 1)
    }

    pub fn face_count(&self) -> usize {
        self.faces.iter().map(Vec::len).sum()
    }

    fn labels(&self, mask: u64) -> Vec<u32> {
        (0..self.vertices.len())
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| self.vertices[i])
            .collect()
    }

    /// All faces as sorted vertex lists, by dimension then lexicographically.
    pub fn faces(&self) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        for layer in &self.faces {
            let mut labelled: Vec<Vec<u32>> = layer.iter().map(|&m| self.labels(m)).collect();
            labelled.sort();
            out.extend(labelled);
        }
        out
    }

    /// Maximal faces as sorted vertex lists.
    pub fn facets(&self) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        for (k, layer) in self.faces.iter().enumerate() {
            let above = self.faces.get(k + 1);
            for &f in layer {
                let covered = above.is_some_and(|a| a.iter().any(|&g| g & f == f));
                if !covered {
                    out.push(self.labels(f));
                }
            }
        }
        out.sort();
        out
    }

    pub fn contains_face(&self, face: &[u32]) -> bool {
        let mut mask = 0u64;
        for v in face {
            match self.vertices.iter().position(|u| u == v) {
                Some(i) => mask |= 1 << i,
                None => return false,
            }
        }
        self.faces
            .get(face.len())
            .is_some_and(|layer| layer.binary_search(&mask).is_ok())
    }
}

/// The Stanley-Reisner complex of `ideal` restricted to the vertex set
/// `sigma`: subsets of `sigma` containing no generator support.
pub fn stanley_reisner_restriction(ideal: &MonomialIdeal, sigma: &[u32]) -> Result<SimplicialComplex> {
    if !ideal.is_square_free() {
        return Err(Error::NotSquareFree(ideal.to_string()));
    }
    let mut vertices = sigma.to_vec();
    vertices.sort_unstable();
    vertices.dedup();
    if vertices.len() > MAX_VARIABLE_CAP {
        return Err(Error::VariableCap {
            vars: vertices.len(),
            cap: MAX_VARIABLE_CAP,
        });
    }
    let pos: HashMap<u32, usize> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let nonfaces: Vec<u64> = ideal
        .generators()
        .iter()
        .filter_map(|g| {
            g.support()
                .try_fold(0u64, |acc, v| pos.get(&v).map(|&i| acc | (1 << i)))
        })
        .collect();
    Ok(restricted_complex(vertices, &nonfaces))
}

/// Faces on `vertices` avoiding every mask in `nonfaces` (all within range).
fn restricted_complex(vertices: Vec<u32>, nonfaces: &[u64]) -> SimplicialComplex {
    let n = vertices.len();
    if nonfaces.contains(&0) {
        return SimplicialComplex {
            vertices,
            faces: Vec::new(),
        };
    }
    let mut faces = vec![0u64];
    let mut stack: Vec<(u64, usize)> = vec![(0, 0)];
    while let Some((face, next)) = stack.pop() {
        for v in next..n {
            let g = face | (1 << v);
            if nonfaces.iter().all(|&nf| nf & !g != 0) {
                faces.push(g);
                stack.push((g, v + 1));
            }
        }
    }
    SimplicialComplex::from_faces(vertices, faces.into_iter())
}

/// Rank of a sparse matrix over GF(p) given by columns of `(row, value)`
/// entries, by column reduction with a pivot table.
fn sparse_rank(columns: Vec<Vec<(usize, u32)>>, field: PrimeField) -> usize {
    let mut pivots: HashMap<usize, Vec<(usize, u32)>> = HashMap::new();
    let mut rank = 0;
    for mut col in columns {
        col.sort_unstable_by_key(|&(r, _)| r);
        while let Some(&(low, c)) = col.last() {
            match pivots.get(&low) {
                None => {
                    // normalize so the pivot entry is one
                    let inv = field.inv(c).expect("nonzero entry");
                    for e in &mut col {
                        e.1 = field.mul(e.1, inv);
                    }
                    pivots.insert(low, col);
                    rank += 1;
                    break;
                }
                Some(p) => {
                    col = axpy(&col, p, field.neg(c), field);
                }
            }
        }
    }
    rank
}

/// `a + s * b` on sorted sparse vectors.
fn axpy(a: &[(usize, u32)], b: &[(usize, u32)], s: u32, field: PrimeField) -> Vec<(usize, u32)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i]);
            i += 1;
        } else if take_b {
            out.push((b[j].0, field.mul(b[j].1, s)));
            j += 1;
        } else {
            let v = field.add(a[i].1, field.mul(b[j].1, s));
            if v != 0 {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Ranks of reduced homology `[H~_{-1}, H~_0, H~_1, ...]` over GF(p), one
/// entry per dimension from `-1` up to the dimension of the complex.
pub fn reduced_homology_ranks(complex: &SimplicialComplex, field: PrimeField) -> Vec<usize> {
    let layers = &complex.faces;
    if complex.is_void() {
        return Vec::new();
    }
    let top = layers.iter().rposition(|l| !l.is_empty()).unwrap();
    // boundary_rank[k] = rank of the map from layer k to layer k - 1
    let mut boundary_rank = vec![0usize; top + 2];
    for k in 1..=top {
        let lower: HashMap<u64, usize> = layers[k - 1].iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let columns: Vec<Vec<(usize, u32)>> = layers[k]
            .iter()
            .map(|&face| {
                let mut entries = Vec::with_capacity(k);
                let mut sign_odd = false;
                for v in 0..64 {
                    if face & (1 << v) != 0 {
                        let row = lower[&(face & !(1 << v))];
                        let value = if sign_odd {
                            field.neg(1)
                        } else {
                            1 % field.characteristic()
                        };
                        entries.push((row, value));
                        sign_odd = !sign_odd;
                    }
                }
                entries
            })
            .collect();
        boundary_rank[k] = sparse_rank(columns, field);
    }
    (0..=top)
        .map(|k| layers[k].len() - boundary_rank[k] - boundary_rank[k + 1])
        .collect()
}

/// Nonzero multigraded Betti numbers of `R/I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    /// `(i, sigma) -> beta_{i,sigma}` with `sigma` a sorted vertex list.
    pub entries: BTreeMap<(usize, Vec<u32>), usize>,
    pub characteristic: u32,
}

impl BettiTable {
    /// Largest homological degree carrying a nonzero Betti number. The entry
    /// `beta_{0,∅} = 1` for `R` itself makes this `0` for the zero ideal.
    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|(i, _)| *i).max().unwrap_or(0)
    }

    /// Total Betti number `beta_i = sum over sigma of beta_{i,sigma}`.
    pub fn total(&self, i: usize) -> usize {
        self.entries.iter().filter(|((k, _), _)| *k == i).map(|(_, v)| *v).sum()
    }

    pub fn totals(&self) -> Vec<usize> {
        (0..=self.projective_dimension()).map(|i| self.total(i)).collect()
    }

    /// Graded Betti number `beta_{i,j}` (sum over `|sigma| = j`).
    pub fn graded(&self, i: usize, j: usize) -> usize {
        self.entries
            .iter()
            .filter(|((k, s), _)| *k == i && s.len() == j)
            .map(|(_, v)| *v)
            .sum()
    }
}

struct Prepared {
    vars: Vec<u32>,
    masks: Vec<u64>,
}

fn prepare(ideal: &MonomialIdeal, cap: usize) -> Result<Prepared> {
    if !ideal.is_square_free() {
        return Err(Error::NotSquareFree(ideal.to_string()));
    }
    if ideal.generators().iter().any(|g| g.is_one()) {
        return Err(Error::InvalidParams("unit ideal has no quotient to resolve".into()));
    }
    let vars = ideal.support();
    let cap = cap.min(MAX_VARIABLE_CAP);
    if vars.len() > cap {
        return Err(Error::VariableCap { vars: vars.len(), cap });
    }
    let pos: HashMap<u32, usize> = vars.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let masks = ideal
        .generators()
        .iter()
        .map(|g| g.support().fold(0u64, |acc, v| acc | (1 << pos[&v])))
        .collect();
    Ok(Prepared { vars, masks })
}

/// `((homological degree, multidegree), rank)`.
type BettiEntry = ((usize, Vec<u32>), usize);

fn table_over(prepared: &Prepared, sigmas: Vec<u64>, field: PrimeField) -> BettiTable {
    let rows: Vec<Vec<BettiEntry>> = sigmas
        .into_par_iter()
        .map(|sigma| {
            let positions: Vec<usize> = (0..prepared.vars.len()).filter(|i| sigma & (1 << i) != 0).collect();
            let labels: Vec<u32> = positions.iter().map(|&i| prepared.vars[i]).collect();
            // re-index the nonfaces inside sigma onto positions 0..|sigma|
            let local: Vec<u64> = prepared
                .masks
                .iter()
                .filter(|&&m| m & !sigma == 0)
                .map(|&m| {
                    positions
                        .iter()
                        .enumerate()
                        .filter(|(_, &p)| m & (1 << p) != 0)
                        .fold(0u64, |acc, (k, _)| acc | (1 << k))
                })
                .collect();
            let complex = restricted_complex(labels.clone(), &local);
            let size = labels.len() as i64;
            reduced_homology_ranks(&complex, field)
                .into_iter()
                .enumerate()
                .filter(|&(_, r)| r > 0)
                .map(|(k, r)| {
                    // layer k holds dimension k - 1
                    let i = size - (k as i64 - 1) - 1;
                    ((i as usize, labels.clone()), r)
                })
                .collect()
        })
        .collect();
    BettiTable {
        entries: rows.into_iter().flatten().collect(),
        characteristic: field.characteristic(),
    }
}

/// Hochster table, enumerating only unions of generator supports.
pub fn betti_table(ideal: &MonomialIdeal, field: PrimeField, cap: usize) -> Result<BettiTable> {
    let prepared = prepare(ideal, cap)?;
    let mut unions: HashSet<u64> = HashSet::from([0]);
    for &g in &prepared.masks {
        let grown: Vec<u64> = unions.iter().map(|&u| u | g).collect();
        unions.extend(grown);
    }
    let mut sigmas: Vec<u64> = unions.into_iter().collect();
    sigmas.sort_unstable();
    Ok(table_over(&prepared, sigmas, field))
}

/// Hochster table over every subset of the support. Exponentially slower;
/// kept as an independent cross-check of the union pruning.
pub fn betti_table_exhaustive(ideal: &MonomialIdeal, field: PrimeField, cap: usize) -> Result<BettiTable> {
    let prepared = prepare(ideal, cap)?;
    let sigmas: Vec<u64> = (0..(1u64 << prepared.vars.len())).collect();
    Ok(table_over(&prepared, sigmas, field))
}

/// `pd(R/I)` from the Hochster table.
pub fn projective_dimension(ideal: &MonomialIdeal, field: PrimeField, cap: usize) -> Result<usize> {
    Ok(betti_table(ideal, field, cap)?.projective_dimension())
}
