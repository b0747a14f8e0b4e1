//! Built-in reference values. Each anchor recomputes a quantity from the
//! library and compares its printed form with a fixed expected string.
//! Anchor ids start with the number of the worked example they come from,
//! so `--filter` can select one example.

use pmtrop::fixtures;
use pmtrop::inequalities::{rank_two_matrix, rank_two_report, minor_inequality_report, LimitFamily, IneqMode, RationalMatrix};
use pmtrop::minors::{flag_valuation, gram, is_positive_definite, trop_principal_minors};
use pmtrop::realization::{
    gale_monotonicity_violations, interval_chain_check, is_top_heavy, minor_table, realize_flag_point,
};
use pmtrop::series::{int, ratio};
use pmtrop::subdivision::{
    default_perturbation, extract_matroid_cells, is_layered, subdivision_edges, upper_hull_subdivision,
};
use pmtrop::tropfn::{
    homogenize_layer, is_dressian, is_flag_dressian, is_m_natural_concave, is_strictly_submodular, is_submodular,
    multisymmetric_lift,
};
use pmtrop::{Rational, Result, ScalingVector, Subset};
use serde::Serialize;

pub struct Anchor {
    pub id: &'static str,
    pub description: &'static str,
    pub expected: &'static str,
    pub compute: fn() -> Result<String>,
}

#[derive(Debug, Serialize)]
pub struct AnchorResult {
    pub id: &'static str,
    pub description: &'static str,
    pub expected: String,
    pub actual: String,
    pub passed: bool,
}

impl Anchor {
    pub fn run(&self) -> AnchorResult {
        self.run_against(self.expected)
    }

    pub fn run_against(&self, expected: &str) -> AnchorResult {
        let actual = match (self.compute)() {
            Ok(v) => v,
            Err(e) => format!("error: {e}"),
        };
        AnchorResult {
            id: self.id,
            description: self.description,
            expected: expected.to_string(),
            passed: actual == expected,
            actual,
        }
    }
}

fn sub(e: &[usize]) -> Subset {
    Subset::from_elements(e.iter().copied())
}

fn cube3_minors() -> Result<pmtrop::SetFunction> {
    trop_principal_minors(&gram(&fixtures::cube3_flag_matrix())?)
}

fn rank_two(r: Rational) -> Result<String> {
    let rep = rank_two_report(&r)?;
    Ok(format!(
        "psd={} rank={} cubic_minors_vanish={} identity={}",
        rep.psd, rep.rank, rep.cubic_minors_vanish, rep.identity_value
    ))
}

fn limit_gap(r: Rational, lam: Rational, eps: Rational) -> Result<String> {
    let p = LimitFamily::new(r, lam, eps)?;
    Ok(format!("gap={} closed_form={}", p.gap(), p.closed_form()))
}

pub fn all() -> Vec<Anchor> {
    vec![
        Anchor {
            id: "2.4-gram-minors",
            description: "tropicalized principal minors of the Gram matrix of the 3x3 flag matrix",
            expected: "1:0 2:0 3:0 12:-4 13:-2 23:-2 123:-8",
            compute: || {
                let w = cube3_minors()?;
                let parts: Vec<String> =
                    pmtrop::SetFunction::ordered_subsets(3)
                        .into_iter()
                        .filter(|s| !s.is_empty())
                        .map(|s| format!("{}:{}", s.label(3), w.get(s)))
                        .collect();
                Ok(parts.join(" "))
            },
        },
        Anchor {
            id: "2.4-minor-13",
            description: "principal minor A_13 and its valuation",
            expected: "t^2 + t^4; val 2; nu -2",
            compute: || {
                let a = gram(&fixtures::cube3_flag_matrix())?;
                let m = a.principal_minor(sub(&[1, 3]))?;
                Ok(format!("{m}; val {}; nu {}", m.val()?, m.nu()?))
            },
        },
        Anchor {
            id: "2.4-positive-definite",
            description: "the Gram matrix is positive definite",
            expected: "true",
            compute: || Ok(is_positive_definite(&gram(&fixtures::cube3_flag_matrix())?)?.to_string()),
        },
        Anchor {
            id: "2.4-submodular",
            description: "minor function is submodular, M-natural concave and in the flag Dressian",
            expected: "submodular=true m_natural=true flag_dressian=true",
            compute: || {
                let w = cube3_minors()?;
                Ok(format!(
                    "submodular={} m_natural={} flag_dressian={}",
                    is_submodular(&w)?,
                    is_m_natural_concave(&w)?,
                    is_flag_dressian(&w)
                ))
            },
        },
        Anchor {
            id: "2.4-lift-dressian",
            description: "multisymmetric lift and every homogenized layer lie in Dressians",
            expected: "lift=true layers=true,true,true",
            compute: || {
                let w = cube3_minors()?;
                let layers: Vec<String> =
                    (0..3).map(|k| homogenize_layer(&w, k).map(|p| is_dressian(&p).to_string())).collect::<Result<_>>()?;
                Ok(format!("lift={} layers={}", is_dressian(&multisymmetric_lift(&w)), layers.join(",")))
            },
        },
        Anchor {
            id: "2.4-edges",
            description: "every subdivision edge has direction e_i or e_i - e_j; subdivision is layered",
            expected: "admissible=true layered=true",
            compute: || {
                let s = upper_hull_subdivision(&cube3_minors()?)?;
                Ok(format!("admissible={} layered={}", subdivision_edges(&s).admissible, is_layered(&s)))
            },
        },
        Anchor {
            id: "2.4-matroid-cells",
            description: "cells of the perturbed subdivision are matroid polytopes",
            expected: "true",
            compute: || {
                let w = cube3_minors()?;
                let ext = extract_matroid_cells(&w, &default_perturbation(&w)?)?;
                Ok(ext.reports.iter().all(|r| r.is_matroid).to_string())
            },
        },
        Anchor {
            id: "2.4-realization",
            description: "realizing the flag matrix doubles its flag valuation",
            expected: "true",
            compute: || {
                let b = fixtures::cube3_flag_matrix();
                let w = flag_valuation(&b)?;
                let cert = realize_flag_point(&w, &b, &ScalingVector::zeros(3), false, 0)?;
                Ok((cert.achieved_minors == w.scaled(&int(2))).to_string())
            },
        },
        Anchor {
            id: "2.5-strict",
            description: "the four-element function is strictly submodular but not M-natural concave",
            expected: "strict=true m_natural=false",
            compute: || {
                let f = fixtures::strict_non_mnatural();
                Ok(format!("strict={} m_natural={}", is_strictly_submodular(&f)?, is_m_natural_concave(&f)?))
            },
        },
        Anchor {
            id: "2.5-long-edge",
            description: "its subdivision has the edge [e_1, e_234] and is not layered",
            expected: "edge=true layered=false",
            compute: || {
                let s = upper_hull_subdivision(&fixtures::strict_non_mnatural())?;
                let (a, b) = (sub(&[1]), sub(&[2, 3, 4]));
                let edge = subdivision_edges(&s).edges.iter().any(|e| (e.u, e.v) == (a, b) || (e.u, e.v) == (b, a));
                Ok(format!("edge={edge} layered={}", is_layered(&s)))
            },
        },
        Anchor {
            id: "3.5-minors",
            description: "minors B(12,23) and B(23,23) of the flag matrix",
            expected: "t - t^2; t^4",
            compute: || {
                let b = fixtures::cube3_flag_matrix();
                Ok(format!("{}; {}", b.minor(sub(&[1, 2]), sub(&[2, 3]))?, b.minor(sub(&[2, 3]), sub(&[2, 3]))?))
            },
        },
        Anchor {
            id: "3.5-mixed-minor",
            description: "minor (23,23) of the mixed matrix",
            expected: "-t + 2*t^2 + t^4",
            compute: || {
                let m = fixtures::cube3_mixer().mul(&fixtures::cube3_flag_matrix())?;
                Ok(m.minor(sub(&[2, 3]), sub(&[2, 3]))?.to_string())
            },
        },
        Anchor {
            id: "3.5-column-valuations",
            description: "valuations of the mixed minors on columns 23",
            expected: "-1,-1,-1",
            compute: || {
                let m = fixtures::cube3_mixer().mul(&fixtures::cube3_flag_matrix())?;
                let v: Vec<String> = [sub(&[1, 2]), sub(&[1, 3]), sub(&[2, 3])]
                    .iter()
                    .map(|&t| m.minor(t, sub(&[2, 3]))?.nu().map(|x| x.to_string()))
                    .collect::<Result<_>>()?;
                Ok(v.join(","))
            },
        },
        Anchor {
            id: "3.7-top-heavy",
            description: "the flag matrix has submodular flag valuation and is top heavy",
            expected: "submodular=true top_heavy=true chain=true",
            compute: || {
                let b = fixtures::cube3_flag_matrix();
                Ok(format!(
                    "submodular={} top_heavy={} chain={}",
                    is_submodular(&flag_valuation(&b)?)?,
                    is_top_heavy(&b)?,
                    interval_chain_check(&b)?
                ))
            },
        },
        Anchor {
            id: "5.4-rank-two-r=0",
            description: "rank two family at r = 0",
            expected: "psd=true rank=2 cubic_minors_vanish=true identity=0",
            compute: || rank_two(int(0)),
        },
        Anchor {
            id: "5.4-rank-two-r=1",
            description: "rank two family at r = 1",
            expected: "psd=true rank=2 cubic_minors_vanish=true identity=0",
            compute: || rank_two(int(1)),
        },
        Anchor {
            id: "5.4-rank-two-r=-5/3",
            description: "rank two family at r = -5/3",
            expected: "psd=true rank=2 cubic_minors_vanish=true identity=0",
            compute: || rank_two(ratio(-5, 3)),
        },
        Anchor {
            id: "5.4-tight-quadruple",
            description: "at r = 3 every ordering passes and the identity ordering is tight at r = 3",
            expected: "orderings=24 all_pass=true tight_at=3",
            compute: || {
                let a: RationalMatrix = rank_two_matrix(&int(3));
                let rep = minor_inequality_report(&a, Subset::EMPTY, IneqMode::Quadruple([1, 2, 3, 4]))?;
                Ok(format!(
                    "orderings={} all_pass={} tight_at={}",
                    rep.permutations.len(),
                    rep.all_pass(),
                    rep.permutations[0].equality_roots.join(",")
                ))
            },
        },
        Anchor {
            id: "5.5-gap-r=1",
            description: "limit family gap at r = 1, lam = 1/8, eps = 1",
            expected: "gap=18 closed_form=18",
            compute: || limit_gap(int(1), ratio(1, 8), int(1)),
        },
        Anchor {
            id: "5.5-gap-r=-1",
            description: "limit family gap at r = -1, lam = 1/2, eps = 2",
            expected: "gap=24 closed_form=24",
            compute: || limit_gap(int(-1), ratio(1, 2), int(2)),
        },
        Anchor {
            id: "5.5-limit",
            description: "limit family gap at eps = 0",
            expected: "gap=0 closed_form=0",
            compute: || limit_gap(int(2), ratio(1, 10), int(0)),
        },
        Anchor {
            id: "6.8-minor-values",
            description: "w({1,3},{3,4}) and w({2,3},{3,4}) of the counterexample matrix",
            expected: "-1,0",
            compute: || {
                let w = minor_table(&fixtures::gale_counterexample_matrix())?;
                Ok(format!("{},{}", w.get(sub(&[1, 3]), sub(&[3, 4])), w.get(sub(&[2, 3]), sub(&[3, 4]))))
            },
        },
        Anchor {
            id: "6.8-flag-zero",
            description: "the counterexample matrix has zero flag valuation and is top heavy",
            expected: "flag_zero=true top_heavy=true",
            compute: || {
                let b = fixtures::gale_counterexample_matrix();
                Ok(format!(
                    "flag_zero={} top_heavy={}",
                    flag_valuation(&b)? == pmtrop::SetFunction::zero(4),
                    is_top_heavy(&b)?
                ))
            },
        },
        Anchor {
            id: "6.8-monotonicity-fails",
            description: "Gale monotonicity of w(., {3,4}) fails at {1,3} below {2,3}",
            expected: "true",
            compute: || {
                let v = gale_monotonicity_violations(&minor_table(&fixtures::gale_counterexample_matrix())?)?;
                Ok(v.contains(&(sub(&[1, 3]), sub(&[2, 3]), sub(&[3, 4]))).to_string())
            },
        },
    ]
}

/// Anchors whose id contains `filter`.
pub fn run(filter: Option<&str>) -> Vec<AnchorResult> {
    all().iter().filter(|a| filter.is_none_or(|f| a.id.contains(f))).map(Anchor::run).collect()
}
