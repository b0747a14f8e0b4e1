//! Regular subdivisions of the 0/1 cube induced by lifting vertex `e_S` to
//! height `F(S)` and projecting the upper hull.
//!
//! Cells are computed as the vertices of the polyhedron of dominating
//! affine functionals `P = {(c, d) : c·e_S + d >= F(S) for all S}`: each
//! vertex of `P` is the lifting functional of one maximal cell, and the
//! constraints tight at it are the cell's vertices. Vertices of `P` are
//! enumerated by the double description method on the homogenized cone in
//! exact integer arithmetic.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lp::{in_cone, LinearSystem, Relation};
use crate::series::{int, Rational};
use crate::subset::{all_subsets, Subset};
use crate::tropfn::{
    homogenize_layer, is_dressian, is_flag_dressian, is_m_natural_concave, is_strictly_submodular, is_submodular,
    multisymmetric_lift, strictifying_scaling, tropical_scale, ScalingVector, SetFunction, MAX_LIFT_N,
};

/// Largest cube dimension accepted by [`upper_hull_subdivision`].
pub const MAX_HULL_N: usize = 6;

/// Cells of a cube subdivision, each a sorted list of vertex masks; cells
/// sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CubeSubdivision {
    n: usize,
    #[serde(serialize_with = "serialize_cells")]
    cells: Vec<Vec<Subset>>,
}

fn serialize_cells<S: serde::Serializer>(cells: &[Vec<Subset>], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(cells.iter().map(|c| c.iter().map(|v| v.0).collect::<Vec<_>>()))
}

impl CubeSubdivision {
    /// Canonicalizes the given cells (sort and deduplicate).
    pub fn new(n: usize, cells: Vec<Vec<Subset>>) -> Result<Self> {
        let full = Subset::full(n);
        let mut canon: Vec<Vec<Subset>> = cells
            .into_iter()
            .map(|mut c| {
                c.sort();
                c.dedup();
                c
            })
            .collect();
        if canon.iter().flatten().any(|v| !v.is_subset_of(full)) {
            return Err(Error::InvalidInput(format!("cell vertex outside the {n}-cube")));
        }
        canon.sort();
        canon.dedup();
        Ok(Self { n, cells: canon })
    }

    /// The one-cell subdivision.
    pub fn trivial(n: usize) -> Self {
        Self { n, cells: vec![all_subsets(n).collect()] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cells(&self) -> &[Vec<Subset>] {
        &self.cells
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("subdivision serializes")
    }
}

/// Cells of the subdivision induced by `f` via the upper hull.
pub fn upper_hull_subdivision(f: &SetFunction) -> Result<CubeSubdivision> {
    let n = f.n();
    if n > MAX_HULL_N {
        return Err(Error::EnumerationBound { n, limit: MAX_HULL_N });
    }
    if !f.is_finite() {
        return Err(Error::NonFinite);
    }
    if n == 0 {
        return Ok(CubeSubdivision::trivial(0));
    }
    let cells = hull_vertices(f)?.into_iter().map(|(cell, _)| cell).collect();
    CubeSubdivision::new(n, cells)
}

/// A maximal cell with its lifting functional `x ↦ c·x + d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftedCell {
    pub vertices: Vec<Subset>,
    pub c: Vec<Rational>,
    pub d: Rational,
}

/// Cells of the upper hull together with their lifting functionals.
pub fn lifted_cells(f: &SetFunction) -> Result<Vec<LiftedCell>> {
    let n = f.n();
    if n > MAX_HULL_N {
        return Err(Error::EnumerationBound { n, limit: MAX_HULL_N });
    }
    if !f.is_finite() {
        return Err(Error::NonFinite);
    }
    if n == 0 {
        return Ok(vec![LiftedCell { vertices: vec![Subset::EMPTY], c: vec![], d: f.at(Subset::EMPTY)?.clone() }]);
    }
    let mut out: Vec<LiftedCell> = hull_vertices(f)?
        .into_iter()
        .map(|(vertices, (c, d))| LiftedCell { vertices, c, d })
        .collect();
    out.sort_by(|a, b| a.vertices.cmp(&b.vertices));
    Ok(out)
}

type Functional = (Vec<Rational>, Rational);

struct Ray {
    coords: Vec<BigInt>,
    /// Bit `k` set iff the `k`-th processed constraint is tight.
    tight: u128,
}

fn normalize(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        v.iter_mut().for_each(|x| *x /= &g);
    }
    v
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Double description on `{(c, d, s) : c·e_S + d - s·F(S) >= 0, s >= 0}`.
fn hull_vertices(f: &SetFunction) -> Result<Vec<(Vec<Subset>, Functional)>> {
    let n = f.n();
    let dim = n + 2;
    // integer heights: scaling F by a positive constant preserves cells
    let denom = f
        .values()
        .iter()
        .filter_map(|v| v.finite())
        .fold(BigInt::one(), |l, r| l.lcm(r.denom()));
    let heights: Vec<BigInt> = f
        .values()
        .iter()
        .map(|v| {
            let r = v.finite().expect("finite checked");
            r.numer() * (&denom / r.denom())
        })
        .collect();
    let row = |s: Subset| -> Vec<BigInt> {
        let mut a = vec![BigInt::zero(); dim];
        for i in s.elements() {
            a[i - 1] = BigInt::one();
        }
        a[n] = BigInt::one();
        a[n + 1] = -heights[s.0 as usize].clone();
        a
    };

    // constraint order: s >= 0, then the empty set and singletons, which
    // together give a simplicial starting cone, then the rest
    let mut order: Vec<Subset> = vec![Subset::EMPTY];
    order.extend((1..=n).map(Subset::singleton));
    order.extend(all_subsets(n).filter(|s| s.len() >= 2));
    let mut constraints: Vec<Vec<BigInt>> = Vec::with_capacity(order.len() + 1);
    let mut s_row = vec![BigInt::zero(); dim];
    s_row[n + 1] = BigInt::one();
    constraints.push(s_row);
    constraints.extend(order.iter().map(|&s| row(s)));

    // initial rays: each tight on all starting constraints but one
    let h0 = &heights[0];
    let mut rays = Vec::with_capacity(dim);
    let start_bits: u128 = (1u128 << dim) - 1;
    {
        let mut r = vec![-BigInt::one(); dim];
        r[n] = BigInt::one();
        r[n + 1] = BigInt::zero();
        rays.push(r);
        for i in 0..n {
            let mut r = vec![BigInt::zero(); dim];
            r[i] = BigInt::one();
            rays.push(r);
        }
        let mut r: Vec<BigInt> = (1..=n).map(|i| &heights[1 << (i - 1)] - h0).collect();
        r.push(h0.clone());
        r.push(BigInt::one());
        rays.push(r);
    }
    let mut rays: Vec<Ray> = rays
        .into_iter()
        .map(|coords| {
            let tight = (0..dim)
                .filter(|&k| dot(&constraints[k], &coords).is_zero())
                .fold(0u128, |acc, k| acc | 1u128 << k);
            Ray { coords: normalize(coords), tight }
        })
        .collect();
    debug_assert!(rays.iter().all(|r| (r.tight & start_bits).count_ones() as usize == dim - 1));

    for k in dim..constraints.len() {
        let a = &constraints[k];
        let vals: Vec<BigInt> = rays.iter().map(|r| dot(a, &r.coords)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_negative()).collect();
        if neg.is_empty() {
            for (r, v) in rays.iter_mut().zip(&vals) {
                if v.is_zero() {
                    r.tight |= 1u128 << k;
                }
            }
            continue;
        }
        let mut fresh = Vec::new();
        for &p in &pos {
            for &q in &neg {
                let common = rays[p].tight & rays[q].tight;
                if (common.count_ones() as usize) < dim - 2 {
                    continue;
                }
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(i, r)| i == p || i == q || r.tight & common != common);
                if !adjacent {
                    continue;
                }
                let coords: Vec<BigInt> = rays[q]
                    .coords
                    .iter()
                    .zip(&rays[p].coords)
                    .map(|(y, x)| &vals[p] * y - &vals[q] * x)
                    .collect();
                fresh.push(Ray { coords: normalize(coords), tight: common | 1u128 << k });
            }
        }
        let mut next: Vec<Ray> = Vec::with_capacity(rays.len() + fresh.len());
        for (r, v) in rays.into_iter().zip(vals) {
            if v.is_positive() {
                next.push(r);
            } else if v.is_zero() {
                next.push(Ray { tight: r.tight | 1u128 << k, ..r });
            }
        }
        next.extend(fresh);
        rays = next;
    }

    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    for r in rays {
        let s = &r.coords[n + 1];
        if !s.is_positive() {
            continue;
        }
        let cell: Vec<Subset> = order
            .iter()
            .enumerate()
            .filter(|(j, _)| r.tight >> (j + 1) & 1 == 1)
            .map(|(_, &v)| v)
            .collect();
        let mut cell = cell;
        cell.sort();
        if !seen.insert(cell.clone()) {
            return Err(Error::Internal("duplicate hull vertex".into()));
        }
        let scale = &denom * s;
        let c = (0..n).map(|i| Rational::new(r.coords[i].clone(), scale.clone())).collect();
        let d = Rational::new(r.coords[n].clone(), scale.clone());
        out.push((cell, (c, d)));
    }
    Ok(out)
}

/// An edge `[e_u, e_v]` (with `u < v` as masks) and its direction `e_v - e_u`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Edge {
    #[serde(serialize_with = "serialize_mask")]
    pub u: Subset,
    #[serde(serialize_with = "serialize_mask")]
    pub v: Subset,
    pub direction: Vec<i8>,
}

fn serialize_mask<S: serde::Serializer>(s: &Subset, ser: S) -> std::result::Result<S::Ok, S::Error> {
    ser.serialize_u64(s.0)
}

impl Edge {
    fn new(n: usize, a: Subset, b: Subset) -> Self {
        let (u, v) = if a < b { (a, b) } else { (b, a) };
        let direction = (1..=n).map(|i| v.contains(i) as i8 - u.contains(i) as i8).collect();
        Self { u, v, direction }
    }

    /// Direction is `±e_i` or `±(e_i - e_j)`.
    pub fn is_admissible(&self) -> bool {
        let support: Vec<i8> = self.direction.iter().copied().filter(|&x| x != 0).collect();
        match support.as_slice() {
            [_] => true,
            [a, b] => a + b == 0,
            _ => false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeReport {
    pub edges: Vec<Edge>,
    /// Every direction is `±e_i` or `±(e_i - e_j)`.
    pub admissible: bool,
}

/// Each cube facet `{x_i = 1}` or `{x_i = 0}` as a bitset over vertex masks.
fn cube_facets(n: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(2 * n);
    for i in 1..=n {
        let on = all_subsets(n).filter(|s| s.contains(i)).fold(0u64, |m, s| m | 1u64 << s.0);
        let off = all_subsets(n).filter(|s| !s.contains(i)).fold(0u64, |m, s| m | 1u64 << s.0);
        out.push(on);
        out.push(off);
    }
    out
}

/// Vertex set of a cell as a bitset over cube vertex masks.
fn cell_bits(cell: &[Subset]) -> u64 {
    cell.iter().fold(0u64, |m, v| m | 1u64 << v.0)
}

/// All 1-faces of all cells.
///
/// The smallest face of a cell containing two of its vertices is the
/// intersection of every face containing both; faces of a cell include its
/// intersections with other cells and with cube facets, and those cover
/// all its facets.
pub fn subdivision_edges(sub: &CubeSubdivision) -> EdgeReport {
    let n = sub.n;
    let bits: Vec<u64> = sub.cells.iter().map(|c| cell_bits(c)).collect();
    let facets = cube_facets(n);
    let mut edges = BTreeSet::new();
    for (ci, cell) in sub.cells.iter().enumerate() {
        let own = bits[ci];
        let faces: Vec<u64> = bits
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != ci)
            .map(|(_, &b)| b & own)
            .chain(facets.iter().map(|&f| f & own))
            .filter(|&b| b != 0)
            .collect();
        for (a, &u) in cell.iter().enumerate() {
            for &v in &cell[a + 1..] {
                let pair = 1u64 << u.0 | 1u64 << v.0;
                let hull = faces.iter().filter(|&&f| f & pair == pair).fold(own, |acc, f| acc & f);
                if hull == pair {
                    edges.insert(Edge::new(n, u, v));
                }
            }
        }
    }
    let edges: Vec<Edge> = edges.into_iter().collect();
    let admissible = edges.iter().all(Edge::is_admissible);
    EdgeReport { edges, admissible }
}

fn point(n: usize, s: Subset) -> Vec<Rational> {
    (1..=n).map(|i| if s.contains(i) { Rational::one() } else { Rational::zero() }).collect()
}

/// LP test: `[e_u, e_v]` is an edge of `conv(cell)` iff `e_v - e_u` is not a
/// nonnegative combination of `e_w - e_u` over the other vertices `w`.
pub fn is_edge_by_lp(n: usize, cell: &[Subset], u: Subset, v: Subset) -> bool {
    let pu = point(n, u);
    let diff = |w: Subset| -> Vec<Rational> { point(n, w).iter().zip(&pu).map(|(a, b)| a - b).collect() };
    let gens: Vec<Vec<Rational>> = cell.iter().filter(|&&w| w != u && w != v).map(|&w| diff(w)).collect();
    !in_cone(&diff(v), &gens)
}

/// Every cell lies in a slab `k <= |S| <= k+1`.
pub fn is_layered(sub: &CubeSubdivision) -> bool {
    sub.cells.iter().all(|c| {
        let lo = c.iter().map(|s| s.len()).min().unwrap_or(0);
        let hi = c.iter().map(|s| s.len()).max().unwrap_or(0);
        hi - lo <= 1
    })
}

/// Every cell of `fine` is contained in a cell of `coarse`.
pub fn refines(fine: &CubeSubdivision, coarse: &CubeSubdivision) -> bool {
    if fine.n != coarse.n {
        return false;
    }
    let coarse_bits: Vec<u64> = coarse.cells.iter().map(|c| cell_bits(c)).collect();
    fine.cells.iter().all(|c| {
        let b = cell_bits(c);
        coarse_bits.iter().any(|&cb| b & cb == b)
    })
}

fn affine_rank(n: usize, cell: &[Subset]) -> usize {
    let Some(&base) = cell.first() else { return 0 };
    let mut rows: Vec<Vec<Rational>> = cell[1..]
        .iter()
        .map(|&w| (1..=n).map(|i| int(w.contains(i) as i64 - base.contains(i) as i64)).collect())
        .collect();
    let mut rank = 0;
    for col in 0..n {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else { continue };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let f = &rows[r][col] / &pivot[col];
                for c in col..n {
                    let d = &f * &pivot[c];
                    rows[r][c] -= d;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Structural validity: every cell is full-dimensional, every cube vertex
/// is covered, and each pair of cells is separated by an affine function
/// vanishing exactly on their common vertices, so their hulls meet in the
/// hull of the common vertices.
pub fn validate(sub: &CubeSubdivision) -> Result<()> {
    let n = sub.n;
    for c in &sub.cells {
        if affine_rank(n, c) != n {
            return Err(Error::Internal(format!("cell {:?} is not full-dimensional", masks(c))));
        }
    }
    let covered = sub.cells.iter().fold(0u64, |m, c| m | cell_bits(c));
    let all = if n >= 6 { u64::MAX } else { (1u64 << (1 << n)) - 1 };
    if covered != all {
        return Err(Error::Internal("some cube vertex lies in no cell".into()));
    }
    for (i, a) in sub.cells.iter().enumerate() {
        for b in &sub.cells[i + 1..] {
            if !separated(n, a, b) {
                return Err(Error::Internal(format!(
                    "cells {:?} and {:?} do not meet in a common face",
                    masks(a),
                    masks(b)
                )));
            }
        }
    }
    Ok(())
}

fn masks(c: &[Subset]) -> Vec<u64> {
    c.iter().map(|s| s.0).collect()
}

/// An affine `h` with `h = 0` on `A ∩ B`, `h <= -1` on `A \ B`, `h >= 1` on `B \ A`.
fn separated(n: usize, a: &[Subset], b: &[Subset]) -> bool {
    let mut sys = LinearSystem::free(n + 1);
    let row = |s: Subset| -> Vec<Rational> {
        let mut r = point(n, s);
        r.push(Rational::one());
        r
    };
    let bset: BTreeSet<Subset> = b.iter().copied().collect();
    let aset: BTreeSet<Subset> = a.iter().copied().collect();
    for &s in a {
        if bset.contains(&s) {
            sys.add(row(s), Relation::Eq, Rational::zero());
        } else {
            sys.add(row(s), Relation::Le, -Rational::one());
        }
    }
    for &s in b {
        if !aset.contains(&s) {
            sys.add(row(s), Relation::Ge, Rational::one());
        }
    }
    sys.is_feasible()
}

/// One cell of a layered subdivision, homogenized onto `[n+1]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatroidCellReport {
    pub layer: usize,
    /// Bases as bitmasks over `[n+1]`.
    #[serde(serialize_with = "serialize_mask_list")]
    pub bases: Vec<Subset>,
    pub is_matroid: bool,
    #[serde(serialize_with = "serialize_opt_pair")]
    pub exchange_failure: Option<(Subset, Subset)>,
}

fn serialize_mask_list<S: serde::Serializer>(v: &[Subset], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.0))
}

fn serialize_opt_pair<S: serde::Serializer>(
    v: &Option<(Subset, Subset)>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some((a, b)) => s.collect_seq([a.0, b.0]),
        None => s.serialize_none(),
    }
}

/// First pair `(B1, B2)` for which some `x ∈ B1 \ B2` has no `y ∈ B2 \ B1`
/// with `B1 - x + y` a basis.
pub fn basis_exchange_failure(bases: &[Subset]) -> Option<(Subset, Subset)> {
    let set: BTreeSet<Subset> = bases.iter().copied().collect();
    for &b1 in bases {
        for &b2 in bases {
            for x in b1.difference(b2).elements() {
                let ok = b2.difference(b1).elements().any(|y| set.contains(&b1.without(x).with(y)));
                if !ok {
                    return Some((b1, b2));
                }
            }
        }
    }
    None
}

pub fn is_matroid_base_family(bases: &[Subset]) -> bool {
    !bases.is_empty() && {
        let k = bases[0].len();
        bases.iter().all(|b| b.len() == k) && basis_exchange_failure(bases).is_none()
    }
}

/// Homogenized bases of a cell in layers `k, k+1`: size-`k` vertices get
/// element `n+1` appended.
pub fn homogenize_cell(n: usize, cell: &[Subset]) -> (usize, Vec<Subset>) {
    let k = cell.iter().map(|s| s.len()).min().unwrap_or(0);
    let mut bases: Vec<Subset> = cell.iter().map(|&s| if s.len() == k { s.with(n + 1) } else { s }).collect();
    bases.sort();
    (k, bases)
}

pub fn matroid_report(n: usize, cell: &[Subset]) -> MatroidCellReport {
    let (layer, bases) = homogenize_cell(n, cell);
    let uniform = bases.iter().all(|b| b.len() == layer + 1);
    let exchange_failure = basis_exchange_failure(&bases);
    MatroidCellReport { layer, is_matroid: uniform && exchange_failure.is_none(), bases, exchange_failure }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatroidExtraction {
    /// The perturbation size actually used.
    #[serde(serialize_with = "serialize_rational")]
    pub eps: Rational,
    pub lambdas: ScalingVector,
    pub original: CubeSubdivision,
    pub refined: CubeSubdivision,
    pub reports: Vec<MatroidCellReport>,
}

fn serialize_rational<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

/// `1 / (1 + 3^n · D · max(R, 1))` with `D` the largest denominator and `R`
/// the range of `f`.
pub fn default_perturbation(f: &SetFunction) -> Result<Rational> {
    let vals: Vec<Rational> = (0..1u64 << f.n()).map(|m| f.at(Subset(m)).cloned()).collect::<Result<_>>()?;
    let d = vals.iter().map(|v| v.denom().clone()).max().unwrap_or_else(BigInt::one);
    let hi = vals.iter().max().cloned().unwrap_or_else(Rational::zero);
    let lo = vals.iter().min().cloned().unwrap_or_else(Rational::zero);
    let range = (hi - lo).max(Rational::one());
    let three = BigInt::from(3).pow(f.n() as u32);
    Ok(Rational::one() / (Rational::one() + Rational::from_integer(three * d) * range))
}

/// Halvings of `eps` tried before giving up on refinement.
pub const PERTURBATION_RETRIES: usize = 16;

/// Perturbs `f` into strict submodularity, recomputes the subdivision and
/// reports the homogenized matroid of every cell.
pub fn extract_matroid_cells(f: &SetFunction, eps: &Rational) -> Result<MatroidExtraction> {
    if !eps.is_positive() {
        return Err(Error::InvalidInput("eps must be positive".into()));
    }
    if !is_m_natural_concave(f)? {
        return Err(Error::Hypothesis("matroid cell extraction needs an M♮-concave function".into()));
    }
    let n = f.n();
    let original = upper_hull_subdivision(f)?;
    let mut eps = eps.clone();
    for _ in 0..=PERTURBATION_RETRIES {
        let lambdas = strictifying_scaling(f, &eps)?;
        let g = tropical_scale(f, &lambdas)?;
        if !is_strictly_submodular(&g)? {
            return Err(Error::Internal("strictifying scaling left a tight square".into()));
        }
        let refined = upper_hull_subdivision(&g)?;
        if !refines(&refined, &original) {
            eps /= int(2);
            continue;
        }
        if !is_layered(&refined) {
            return Err(Error::Internal("perturbed subdivision of an M♮-concave function is not layered".into()));
        }
        let reports = refined.cells().iter().map(|c| matroid_report(n, c)).collect();
        return Ok(MatroidExtraction { eps, lambdas, original, refined, reports });
    }
    Err(Error::Internal(format!(
        "perturbed subdivision failed to refine the original after {PERTURBATION_RETRIES} halvings"
    )))
}

/// Verdicts of the equivalent descriptions of M♮-concavity for a finite
/// function. Checks that are too large for `n` are `None`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Characterizations {
    pub exchange: bool,
    pub lift_dressian: Option<bool>,
    pub submodular_layers: bool,
    pub submodular_flag: bool,
    pub edge_directions: Option<bool>,
}

impl Characterizations {
    /// All computed verdicts agree.
    pub fn agree(&self) -> bool {
        [self.lift_dressian, Some(self.submodular_layers), Some(self.submodular_flag), self.edge_directions]
            .into_iter()
            .flatten()
            .all(|v| v == self.exchange)
    }
}

/// Exchange axiom, Dressian of the multisymmetric lift (`n <= 5`),
/// submodularity plus every homogenized layer, submodularity plus the flag
/// Dressian, and edge directions of the subdivision (`n <= 6`).
pub fn characterizations(f: &SetFunction) -> Result<Characterizations> {
    if !f.is_finite() {
        return Err(Error::NonFinite);
    }
    let n = f.n();
    let submodular = is_submodular(f)?;
    let mut layers = submodular;
    for k in 0..n {
        layers = layers && is_dressian(&homogenize_layer(f, k)?);
    }
    Ok(Characterizations {
        exchange: is_m_natural_concave(f)?,
        lift_dressian: (n <= MAX_LIFT_N).then(|| is_dressian(&multisymmetric_lift(f))),
        submodular_layers: layers,
        submodular_flag: submodular && is_flag_dressian(f),
        edge_directions: if n <= MAX_HULL_N {
            Some(subdivision_edges(&upper_hull_subdivision(f)?).admissible)
        } else {
            None
        },
    })
}
