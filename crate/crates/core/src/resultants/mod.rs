//! The independent brute-force oracle: eigen-systems of hypermatrices and
//! their exact resultants in the eigenvalue parameter.
//!
//! Two constructions are provided. For systems in two variables the
//! classical Sylvester determinant applies; for three or more variables the
//! Macaulay quotient of two determinants is used. Both are evaluated at
//! integer parameter samples with exact rational determinants and
//! reconstructed by Lagrange interpolation, then normalized monic. This
//! path shares no code with the closed-form constructions it is used to
//! check.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::polynomial::{MultiPoly, RatPoly};
use crate::serde_util::RatJson;

mod macaulay;
mod numeric;
mod poisson;
mod sylvester;

pub use macaulay::{macaulay_point_quotient, macaulay_resultant, macaulay_resultant_from};
pub use numeric::polynomial_roots;
pub use poisson::{poisson_check_binary, random_poisson_trial};
pub use sylvester::{sylvester_resultant, sylvester_resultant_from};

/// Sparse symmetric hypermatrix: an order-m, dimension-N array of rationals.
///
/// Symmetry of the stored entries is not required; the eigen-system builder
/// sums entries exactly as given.
#[derive(Clone, Debug, PartialEq)]
pub struct Hypermatrix {
    order: u32,
    dim: usize,
    entries: BTreeMap<Vec<usize>, BigRational>,
}

impl Hypermatrix {
    /// The all-zero hypermatrix.
    pub fn zero(dim: usize, order: u32) -> Result<Self> {
        if dim == 0 || order < 2 {
            return Err(Error::InvalidParam(
                "hypermatrix needs dim >= 1 and order >= 2".into(),
            ));
        }
        Ok(Hypermatrix {
            order,
            dim,
            entries: BTreeMap::new(),
        })
    }

    /// The all-ones hypermatrix of the given dimension and order.
    pub fn all_ones(dim: usize, order: u32) -> Result<Self> {
        let mut a = Self::zero(dim, order)?;
        let mut idx = vec![0usize; order as usize];
        loop {
            a.entries.insert(idx.clone(), BigRational::one());
            // Odometer increment over [0, dim)^order.
            let mut pos = idx.len();
            loop {
                if pos == 0 {
                    return Ok(a);
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < dim {
                    break;
                }
                idx[pos] = 0;
            }
        }
    }

    /// Add `value` to the entry at the given index tuple.
    pub fn add_entry(&mut self, idx: Vec<usize>, value: BigRational) -> Result<()> {
        if idx.len() != self.order as usize {
            return Err(Error::LengthMismatch {
                expected: self.order as usize,
                got: idx.len(),
            });
        }
        if idx.iter().any(|&i| i >= self.dim) {
            return Err(Error::InvalidParam(format!(
                "index {idx:?} out of range for dimension {}",
                self.dim
            )));
        }
        if value.is_zero() {
            return Ok(());
        }
        let slot = self.entries.entry(idx).or_insert_with(BigRational::zero);
        *slot += value;
        Ok(())
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Vec<usize>, &BigRational)> {
        self.entries.iter()
    }

    /// The eigenvalue system: for each row index i, the homogeneous
    /// polynomial `lambda x_i^(m-1) - sum A[i, j_2..j_m] x_{j_2}...x_{j_m}`.
    pub fn eigen_system(&self) -> Vec<MultiPoly> {
        let m = self.order as usize;
        let mut rows: Vec<MultiPoly> = (0..self.dim).map(|_| MultiPoly::new(self.dim)).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            let mut exps = vec![0u32; self.dim];
            exps[i] = self.order - 1;
            row.add_term(exps, RatPoly::new(vec![BigRational::zero(), BigRational::one()]));
        }
        for (idx, val) in &self.entries {
            let i = idx[0];
            let mut exps = vec![0u32; self.dim];
            for &j in &idx[1..m] {
                exps[j] += 1;
            }
            rows[i].add_term(exps, RatPoly::constant(-val.clone()));
        }
        rows
    }
}

#[derive(Serialize, Deserialize)]
struct HypermatrixEntryWire {
    idx: Vec<usize>,
    val: RatJson,
}

#[derive(Serialize, Deserialize)]
struct HypermatrixWire {
    m: u32,
    n: usize,
    entries: Vec<HypermatrixEntryWire>,
}

impl Serialize for Hypermatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        HypermatrixWire {
            m: self.order,
            n: self.dim,
            entries: self
                .entries
                .iter()
                .map(|(idx, val)| HypermatrixEntryWire {
                    idx: idx.clone(),
                    val: RatJson::from_rational(val),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Hypermatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let wire = HypermatrixWire::deserialize(d)?;
        let mut a = Hypermatrix::zero(wire.n, wire.m).map_err(D::Error::custom)?;
        for e in wire.entries {
            let val = e.val.to_rational().map_err(D::Error::custom)?;
            a.add_entry(e.idx, val).map_err(D::Error::custom)?;
        }
        Ok(a)
    }
}

/// A k-uniform hypergraph on vertices `0..vertices`.
#[derive(Clone, Debug, PartialEq)]
pub struct Hypergraph {
    vertices: usize,
    k: u32,
    edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    /// Validates that every edge is a k-set of distinct in-range vertices
    /// and that no edge repeats. Edges are stored sorted.
    pub fn new(vertices: usize, k: u32, edges: Vec<Vec<usize>>) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidParam("uniformity k must be at least 2".into()));
        }
        let mut sorted_edges = Vec::with_capacity(edges.len());
        for mut e in edges {
            if e.len() != k as usize {
                return Err(Error::LengthMismatch {
                    expected: k as usize,
                    got: e.len(),
                });
            }
            e.sort_unstable();
            if e.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidParam(format!(
                    "edge {e:?} has repeated vertices"
                )));
            }
            if e.iter().any(|&v| v >= vertices) {
                return Err(Error::InvalidParam(format!(
                    "edge {e:?} out of range for {vertices} vertices"
                )));
            }
            if sorted_edges.contains(&e) {
                return Err(Error::InvalidParam(format!("duplicate edge {e:?}")));
            }
            sorted_edges.push(e);
        }
        Ok(Hypergraph {
            vertices,
            k,
            edges: sorted_edges,
        })
    }

    /// The sunflower with n petals, q seed vertices, and uniformity k:
    /// vertices `0..q` are the seeds, each edge is the seeds plus one petal
    /// of k-q fresh vertices, so edges pairwise intersect exactly in the
    /// seed set.
    pub fn sunflower(n: usize, q: usize, k: u32) -> Result<Self> {
        if q == 0 || q >= k as usize {
            return Err(Error::InvalidParam(format!(
                "sunflower needs 0 < q < k, got q={q}, k={k}"
            )));
        }
        if n == 0 {
            return Err(Error::InvalidParam("sunflower needs at least one petal".into()));
        }
        let petal = k as usize - q;
        let vertices = q + n * petal;
        let mut edges = Vec::with_capacity(n);
        for i in 0..n {
            let mut e: Vec<usize> = (0..q).collect();
            e.extend(q + i * petal..q + (i + 1) * petal);
            edges.push(e);
        }
        Self::new(vertices, k, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn uniformity(&self) -> u32 {
        self.k
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    /// The adjacency hypermatrix: entry `1/(k-1)!` at every permutation of
    /// every edge, so that row v of the eigen-system reads
    /// `lambda x_v^(k-1) - sum over edges containing v of the product of
    /// the other k-1 coordinates`.
    pub fn adjacency_hypermatrix(&self) -> Result<Hypermatrix> {
        let mut a = Hypermatrix::zero(self.vertices, self.k)?;
        let mut factorial = BigRational::one();
        for i in 1..self.k as u64 {
            factorial *= BigRational::from_integer(i.into());
        }
        let weight = BigRational::one() / factorial;
        for e in &self.edges {
            for perm in permutations(e) {
                a.add_entry(perm, weight.clone())?;
            }
        }
        Ok(a)
    }
}

#[derive(Serialize, Deserialize)]
struct HypergraphWire {
    vertices: usize,
    k: u32,
    edges: Vec<Vec<usize>>,
}

impl Serialize for Hypergraph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        HypergraphWire {
            vertices: self.vertices,
            k: self.k,
            edges: self.edges.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Hypergraph {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let wire = HypergraphWire::deserialize(d)?;
        Hypergraph::new(wire.vertices, wire.k, wire.edges).map_err(D::Error::custom)
    }
}

/// All permutations of a slice, in a deterministic order.
fn permutations<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head.clone());
            out.push(tail);
        }
    }
    out
}

/// A resultant in the eigenvalue parameter, normalized monic, together with
/// the discarded leading coefficient.
#[derive(Clone, Debug, PartialEq)]
pub struct OracleResultant {
    /// Monic polynomial in the eigenvalue parameter.
    pub monic: RatPoly,
    /// The leading coefficient that monic normalization divided out.
    pub leading: BigRational,
}

/// Characteristic polynomial of a hypermatrix by the appropriate exact
/// resultant construction: the coefficient itself for one variable,
/// Sylvester for two, the Macaulay quotient for three or more.
pub fn oracle_charpoly(a: &Hypermatrix) -> Result<OracleResultant> {
    let system = a.eigen_system();
    match a.dim() {
        1 => {
            // One homogeneous form c(lambda) x^(m-1): the resultant is the
            // coefficient polynomial itself.
            let row = &system[0];
            let mut coeff = RatPoly::zero();
            for (_, c) in row.terms() {
                coeff = coeff.add(c);
            }
            let (monic, leading) = coeff.monic().ok_or(Error::ZeroResultant)?;
            Ok(OracleResultant { monic, leading })
        }
        2 => sylvester_resultant(&system[0], &system[1]),
        _ => macaulay_resultant(&system),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn all_ones_eigen_system_is_the_squared_sum() {
        let a = Hypermatrix::all_ones(2, 3).unwrap();
        let system = a.eigen_system();
        assert_eq!(system.len(), 2);
        // Row 0: lambda x0^2 - (x0 + x1)^2 expands to
        // (lambda - 1) x0^2 - 2 x0 x1 - x1^2.
        let row = &system[0];
        assert_eq!(row.homogeneous_degree(), Some(2));
        let at_one = row.eval_lambda(&BigRational::one());
        assert_eq!(at_one.get(&vec![2u32, 0]), None); // lambda - 1 = 0
        assert_eq!(
            at_one.get(&vec![1u32, 1]),
            Some(&BigRational::from_integer(BigInt::from(-2)))
        );
        assert_eq!(
            at_one.get(&vec![0u32, 2]),
            Some(&BigRational::from_integer(BigInt::from(-1)))
        );
    }

    #[test]
    fn sunflower_shapes() {
        let s = Hypergraph::sunflower(1, 1, 3).unwrap();
        assert_eq!(s.vertex_count(), 3);
        assert_eq!(s.edges().len(), 1);

        let s = Hypergraph::sunflower(2, 1, 3).unwrap();
        assert_eq!(s.vertex_count(), 5);
        assert_eq!(s.edges(), &[vec![0, 1, 2], vec![0, 3, 4]]);

        let s = Hypergraph::sunflower(3, 2, 4).unwrap();
        assert_eq!(s.vertex_count(), 8);
        assert_eq!(s.edges().len(), 3);
        // Pairwise intersections are exactly the seed set {0, 1}.
        for i in 0..3 {
            for j in i + 1..3 {
                let inter: Vec<usize> = s.edges()[i]
                    .iter()
                    .filter(|v| s.edges()[j].contains(v))
                    .cloned()
                    .collect();
                assert_eq!(inter, vec![0, 1]);
            }
        }
    }

    #[test]
    fn sunflower_rejects_bad_parameters() {
        assert!(Hypergraph::sunflower(1, 0, 3).is_err());
        assert!(Hypergraph::sunflower(1, 3, 3).is_err());
        assert!(Hypergraph::sunflower(0, 1, 3).is_err());
    }

    #[test]
    fn single_edge_sunflower_eigen_system() {
        // One 3-uniform edge {0,1,2}: row v is lambda x_v^2 minus the
        // product of the other two coordinates.
        let s = Hypergraph::sunflower(1, 1, 3).unwrap();
        let a = s.adjacency_hypermatrix().unwrap();
        let system = a.eigen_system();
        assert_eq!(system.len(), 3);
        let row0 = system[0].eval_lambda(&BigRational::zero());
        assert_eq!(
            row0.get(&vec![0u32, 1, 1]),
            Some(&BigRational::from_integer(BigInt::from(-1)))
        );
        assert_eq!(row0.len(), 1);
        let row1 = system[1].eval_lambda(&BigRational::zero());
        assert_eq!(
            row1.get(&vec![1u32, 0, 1]),
            Some(&BigRational::from_integer(BigInt::from(-1)))
        );
    }

    #[test]
    fn zero_hypermatrix_eigen_system() {
        let a = Hypermatrix::zero(2, 3).unwrap();
        let system = a.eigen_system();
        for (i, row) in system.iter().enumerate() {
            let terms: Vec<_> = row.terms().collect();
            assert_eq!(terms.len(), 1, "row {i} should be lambda x_i^2 only");
        }
    }

    #[test]
    fn hypermatrix_json_round_trip() {
        let s = Hypergraph::sunflower(2, 1, 3).unwrap();
        let a = s.adjacency_hypermatrix().unwrap();
        let text = serde_json::to_string(&a).unwrap();
        let back: Hypermatrix = serde_json::from_str(&text).unwrap();
        assert_eq!(back, a);

        let gtext = serde_json::to_string(&s).unwrap();
        let gback: Hypergraph = serde_json::from_str(&gtext).unwrap();
        assert_eq!(gback, s);
    }

    #[test]
    fn hypergraph_validation() {
        assert!(Hypergraph::new(3, 3, vec![vec![0, 1, 1]]).is_err());
        assert!(Hypergraph::new(3, 3, vec![vec![0, 1, 3]]).is_err());
        assert!(Hypergraph::new(4, 3, vec![vec![0, 1, 2], vec![2, 1, 0]]).is_err());
        assert!(Hypergraph::new(4, 2, vec![vec![0, 1], vec![1, 2]]).is_ok());
    }
}
