//! Numerical shadows of the geometry of the affine Grassmannian: orbit
//! dimensions, the closure order, the bound on `dim(Gr^λ ∩ S^ν)`, admissible
//! characters, the predicted cohomology of the Whittaker sheaves, and the
//! codimensions of the strata of the Drinfeld compactification.

use std::cmp::Reverse;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rep_ring::RepRing;
use crate::root_datum::{integer_box, Coweight, RootDatum};

/// `dim Gr^λ = ⟨λ,2ρ̌⟩`.
pub fn orbit_dim(datum: &RootDatum, lambda: &Coweight) -> Result<i64> {
    datum.require_dominant(lambda)?;
    Ok(datum.level(lambda))
}

/// Whether `Gr^μ` lies in the closure of `Gr^λ`, i.e. `μ ≤ λ`.
pub fn closure_contains(datum: &RootDatum, lambda: &Coweight, mu: &Coweight) -> Result<bool> {
    datum.require_dominant(lambda)?;
    datum.require_dominant(mu)?;
    Ok(datum.dominance_leq(mu, lambda))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MvBound {
    Empty,
    Bound {
        dim: i64,
        /// `ν = w₀λ`: the intersection is a single point.
        point: bool,
        /// `ν = λ`: the intersection is open and dense in `Gr^λ`.
        open_dense: bool,
    },
}

impl MvBound {
    pub fn dim(&self) -> Option<i64> {
        match self {
            MvBound::Empty => None,
            MvBound::Bound { dim, .. } => Some(*dim),
        }
    }
}

/// The bound `⟨λ+ν,ρ̌⟩` on `dim(Gr^λ ∩ S^ν)`, or `Empty` when the intersection
/// is empty. It is nonempty exactly when `ν` lies in the convex hull of `Wλ`
/// and `λ - ν` is in the coroot lattice, i.e. when the dominant representative
/// of `ν` is `≤ λ`.
pub fn mv_dim_bound(datum: &RootDatum, lambda: &Coweight, nu: &Coweight) -> Result<MvBound> {
    datum.require_dominant(lambda)?;
    datum.check(nu)?;
    let rep = datum.dominant_representative(nu).dominant;
    if !datum.dominance_leq(&rep, lambda) {
        return Ok(MvBound::Empty);
    }
    let twice = datum.level(lambda) + datum.level(nu);
    debug_assert_eq!(twice % 2, 0);
    Ok(MvBound::Bound {
        dim: twice / 2,
        point: *nu == datum.apply_w0(lambda),
        open_dense: nu == lambda,
    })
}

/// `χ_μ` restricts to a character on `S^ν` iff `μ + ν` is dominant.
pub fn chi_admissible(datum: &RootDatum, mu: &Coweight, nu: &Coweight) -> bool {
    datum.is_dominant(&(mu + nu))
}

/// Predicted shape of the cohomology of `Gr^λ ∩ S^ν` against `χ_μ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyPrediction {
    pub vanishes: bool,
    /// The single nonvanishing degree `⟨2ν,ρ̌⟩`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<i64>,
    /// `dim Hom(V^λ ⊗ V^μ, V^{μ+ν})`.
    pub dim: u64,
    /// Frobenius acts by `q^{frob}`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub frob: Option<i64>,
}

impl CohomologyPrediction {
    fn vanishing() -> Self {
        CohomologyPrediction {
            vanishes: true,
            k: None,
            dim: 0,
            frob: None,
        }
    }
}

/// Requires `λ` and `μ + ν` dominant. The cohomology vanishes when `μ` is not
/// dominant or the tensor multiplicity is zero; otherwise it sits in degree
/// `⟨2ν,ρ̌⟩` with Frobenius weight `⟨ν,2ρ̌⟩`.
pub fn predicted_cohomology(
    ring: &RepRing,
    lambda: &Coweight,
    mu: &Coweight,
    nu: &Coweight,
) -> Result<CohomologyPrediction> {
    let d = ring.datum();
    d.require_dominant(lambda)?;
    d.check(mu)?;
    d.check(nu)?;
    let target = mu + nu;
    if !d.is_dominant(&target) {
        return Err(Error::Precondition(format!(
            "μ + ν = {target} is not dominant"
        )));
    }
    if !d.is_dominant(mu) {
        return Ok(CohomologyPrediction::vanishing());
    }
    let dim = ring.tensor_multiplicity(lambda, mu, &target)?;
    if dim == 0 {
        return Ok(CohomologyPrediction::vanishing());
    }
    // ⟨2ν,ρ̌⟩ and ⟨ν,2ρ̌⟩ are the same integer
    let k = d.level(nu);
    Ok(CohomologyPrediction {
        vanishes: false,
        k: Some(k),
        dim,
        frob: Some(k),
    })
}

/// The smallest multiple `μ = kρ` of the dual half-sum in `Λ` with
/// `⟨μ,α̌_i⟩ ≥ ⟨λ,2ρ̌⟩` for all `i`.
pub fn largeness_threshold(datum: &RootDatum, lambda: &Coweight) -> Coweight {
    let doubled = datum.two_rho_dual();
    let mut k = datum.level(lambda);
    loop {
        let scaled: Vec<i64> = doubled.iter().map(|&x| x * k).collect();
        if scaled.iter().all(|x| x % 2 == 0) {
            return Coweight(scaled.into_iter().map(|x| x / 2).collect());
        }
        k += 1;
    }
}

/// For `μ` large compared to `λ`, `C^{μ+ν}_{λμ} = dim V^λ(ν)`. Returns whether
/// the two sides agree.
pub fn mv_weight_multiplicity_check(
    ring: &RepRing,
    lambda: &Coweight,
    nu: &Coweight,
    mu: &Coweight,
) -> Result<bool> {
    let (lhs, rhs) = mv_weight_multiplicity_sides(ring, lambda, nu, mu)?;
    Ok(lhs == rhs)
}

/// The two sides `(C^{μ+ν}_{λμ}, dim V^λ(ν))` of the large-μ identity.
pub fn mv_weight_multiplicity_sides(
    ring: &RepRing,
    lambda: &Coweight,
    nu: &Coweight,
    mu: &Coweight,
) -> Result<(u64, u64)> {
    let d = ring.datum();
    d.require_dominant(lambda)?;
    d.require_dominant(mu)?;
    d.check(nu)?;
    let level = d.level(lambda);
    if d.simple_pairings(mu).iter().any(|&p| p < level) {
        return Err(Error::Precondition(format!(
            "μ = {mu} is not large enough for λ = {lambda}: need every ⟨μ,α̌_i⟩ ≥ {level}"
        )));
    }
    let target = mu + nu;
    let lhs = if d.is_dominant(&target) {
        ring.tensor_multiplicity(lambda, mu, &target)?
    } else {
        0
    };
    Ok((lhs, ring.weight_multiplicity(lambda, nu)?))
}

/// A stratum of the Drinfeld compactification, indexed by
/// `γ = -Σ d_i α_i ∈ -Λ⁺`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DrinfeldStratum {
    pub gamma: Coweight,
    pub degrees: Vec<i64>,
    pub codim: i64,
}

/// All strata with `Σ d_i ≤ bound`, ordered by codimension.
pub fn drinfeld_strata(datum: &RootDatum, bound: i64) -> Vec<DrinfeldStratum> {
    let mut degrees: Vec<Vec<i64>> = integer_box(datum.rank(), 0, bound.max(0))
        .into_iter()
        .filter(|d| d.iter().sum::<i64>() <= bound)
        .collect();
    degrees.sort_by_key(|d| (d.iter().sum::<i64>(), Reverse(d.clone())));
    degrees
        .into_iter()
        .map(|d| {
            let mut gamma = vec![0; datum.lattice_rank()];
            for (di, alpha) in d.iter().zip(datum.simple_coroots()) {
                for (g, a) in gamma.iter_mut().zip(alpha) {
                    *g -= di * a;
                }
            }
            DrinfeldStratum {
                gamma: Coweight(gamma),
                codim: 2 * d.iter().sum::<i64>(),
                degrees: d,
            }
        })
        .collect()
}

/// CSV rendering of predictions: `λ, μ, ν, vanishes, k, dim, frob_weight`.
pub fn predictions_csv(rows: &[(Coweight, Coweight, Coweight, CohomologyPrediction)]) -> String {
    let mut out = String::from("lambda,mu,nu,vanishes,k,dim,frob_weight\n");
    let opt = |x: Option<i64>| x.map(|v| v.to_string()).unwrap_or_default();
    for (l, m, n, p) in rows {
        out.push_str(&format!(
            "\"{}\",\"{}\",\"{}\",{},{},{},{}\n",
            l.key(),
            m.key(),
            n.key(),
            p.vanishes,
            opt(p.k),
            p.dim,
            opt(p.frob)
        ));
    }
    out
}
