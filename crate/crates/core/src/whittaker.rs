//! The Whittaker module: functions on `G(K)` that are `(N(K), χ)`-equivariant
//! on the left and `G(O)`-invariant on the right. It is free of rank one over
//! the Hecke algebra, with basis `φ_λ` for dominant `λ`.
//!
//! The right action is `φ_μ ⋆ A_λ = Σ_ν C^ν_{λμ} φ_ν`. Since the Hecke algebra
//! is commutative, the left action `h ⋆ W` used in the eigen-identity is the
//! same coefficient rule after the anti-involution `∗`, so only the right
//! action is implemented.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hecke::{Basis, BasisElement, HeckeAlgebra};
use crate::laurent::RatLaurent;
use crate::rep_ring::TorusPoint;
use crate::root_datum::Coweight;

/// An element of the Whittaker module, i.e. a `PHI`-basis element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WhittakerElement(BasisElement);

impl WhittakerElement {
    pub fn new(e: BasisElement) -> Result<Self> {
        e.expect_basis(Basis::Phi)?;
        Ok(WhittakerElement(e))
    }

    pub fn zero() -> Self {
        WhittakerElement(BasisElement::zero(Basis::Phi))
    }

    pub fn element(&self) -> &BasisElement {
        &self.0
    }

    pub fn into_element(self) -> BasisElement {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl std::fmt::Display for WhittakerElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// One row of a Whittaker value table: `W_γ(λ(t)) = value · v^{v_power}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WhittakerValueRow {
    pub lambda: Coweight,
    #[serde(serialize_with = "ser_rational")]
    pub value: BigRational,
    pub v_power: i64,
}

fn ser_rational<S: serde::Serializer>(
    x: &BigRational,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

#[derive(Clone, Copy, Debug)]
pub struct WhittakerModule<'a> {
    hecke: &'a HeckeAlgebra,
}

impl<'a> WhittakerModule<'a> {
    pub fn new(hecke: &'a HeckeAlgebra) -> Self {
        WhittakerModule { hecke }
    }

    pub fn hecke(&self) -> &'a HeckeAlgebra {
        self.hecke
    }

    /// The basis vector `φ_λ`.
    pub fn phi(&self, lambda: &Coweight) -> Result<WhittakerElement> {
        self.hecke.datum().require_dominant(lambda)?;
        Ok(WhittakerElement(BasisElement::basis_vector(
            Basis::Phi,
            lambda.clone(),
        )))
    }

    /// `w ⋆ h` for `h` in the `A`-basis.
    pub fn act(&self, w: &WhittakerElement, h: &BasisElement) -> Result<WhittakerElement> {
        h.expect_basis(Basis::A)?;
        let prod = self.hecke.mul(&w.0.relabel(Basis::A), h)?;
        Ok(WhittakerElement(prod.relabel(Basis::Phi)))
    }

    /// `F(h) = φ₀ ⋆ h`, which sends `A_λ` to `φ_λ`; computed by relabelling.
    pub fn f_transform(&self, h: &BasisElement) -> Result<WhittakerElement> {
        h.expect_basis(Basis::A)?;
        self.hecke.validate(h)?;
        Ok(WhittakerElement(h.relabel(Basis::Phi)))
    }

    /// `F(h)` computed through the module action on `φ₀`.
    pub fn f_transform_via_action(&self, h: &BasisElement) -> Result<WhittakerElement> {
        let phi0 = self.phi(&Coweight::zero(self.hecke.datum().lattice_rank()))?;
        self.act(&phi0, h)
    }

    /// `W_γ(λ(t))`: zero off the dominant cone, otherwise
    /// `Tr(γ, (V^λ)*) · v^{-⟨λ,2ρ̌⟩}`.
    pub fn whittaker_value(&self, gamma: &TorusPoint, lambda: &Coweight) -> Result<RatLaurent> {
        let d = self.hecke.datum();
        d.check(lambda)?;
        if !d.is_dominant(lambda) {
            return Ok(RatLaurent::zero());
        }
        let tr = self.hecke.ring().dual_character_eval(lambda, gamma)?;
        Ok(RatLaurent::monomial(tr, -d.level(lambda)))
    }

    /// Values of `W_γ` on every dominant `λ` with `⟨λ,2ρ̌⟩ ≤ max_level`.
    pub fn value_table(
        &self,
        gamma: &TorusPoint,
        max_level: i64,
        coord_bound: Option<i64>,
    ) -> Result<Vec<WhittakerValueRow>> {
        let d = self.hecke.datum();
        d.dominant_coweights(max_level, coord_bound)?
            .into_iter()
            .map(|lambda| {
                let value = self.hecke.ring().dual_character_eval(&lambda, gamma)?;
                let v_power = -d.level(&lambda);
                Ok(WhittakerValueRow {
                    lambda,
                    value,
                    v_power,
                })
            })
            .collect()
    }

    /// The truncation `Σ_{⟨λ,2ρ̌⟩ ≤ cutoff} Tr(γ,(V^λ)*) φ_λ` of `W_γ`, as
    /// rational coefficients.
    pub fn truncated_w(
        &self,
        gamma: &TorusPoint,
        cutoff: i64,
    ) -> Result<BTreeMap<Coweight, BigRational>> {
        let d = self.hecke.datum();
        let mut out = BTreeMap::new();
        for lambda in d.dominant_coweights(cutoff, None)? {
            let tr = self.hecke.ring().dual_character_eval(&lambda, gamma)?;
            out.insert(lambda, tr);
        }
        Ok(out)
    }

    /// Coefficients of `W⋆A_λ - Tr(γ,V^λ)·W` on the safe window, where `W` is
    /// `W_γ` truncated at `⟨·,2ρ̌⟩ ≤ cutoff`.
    ///
    /// A coefficient at `ν` only sees `μ` with `⟨μ,2ρ̌⟩ ≤ ⟨ν,2ρ̌⟩ + ⟨λ,2ρ̌⟩`,
    /// so the window `⟨ν,2ρ̌⟩ ≤ cutoff - ⟨λ,2ρ̌⟩` is free of truncation
    /// effects and the residual there must vanish identically.
    pub fn eigen_residual(
        &self,
        gamma: &TorusPoint,
        lambda_act: &Coweight,
        cutoff: i64,
    ) -> Result<BTreeMap<Coweight, BigRational>> {
        let d = self.hecke.datum();
        d.require_dominant(lambda_act)?;
        if !d.is_semisimple() {
            return Err(Error::Precondition(
                "eigen_residual needs a semisimple datum (finite truncation windows)".into(),
            ));
        }
        let pad = d.level(lambda_act);
        if cutoff < pad {
            return Err(Error::Precondition(format!(
                "cutoff {cutoff} is below the window padding {pad} for {lambda_act}"
            )));
        }
        let ring = self.hecke.ring();
        let w = self.truncated_w(gamma, cutoff)?;
        let eigenvalue = ring.character_eval(lambda_act, gamma)?;

        let mut acted: BTreeMap<Coweight, BigRational> = BTreeMap::new();
        for (mu, coeff) in &w {
            for (nu, &c) in ring.tensor_decompose(lambda_act, mu)?.iter() {
                let e = acted.entry(nu.clone()).or_insert_with(BigRational::zero);
                *e += coeff * BigRational::from_integer(c.into());
            }
        }
        let window = cutoff - pad;
        Ok(w.iter()
            .filter(|(nu, _)| d.level(nu) <= window)
            .map(|(nu, coeff)| {
                let lhs = acted.get(nu).cloned().unwrap_or_else(BigRational::zero);
                (nu.clone(), lhs - &eigenvalue * coeff)
            })
            .collect())
    }
}

/// Outcome of [`WhittakerModule::verify_cs`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CsReport {
    pub transform_checks: usize,
    pub module_checks: usize,
    pub eigen_checks: usize,
    pub failures: Vec<String>,
}

impl CsReport {
    pub fn total(&self) -> usize {
        self.transform_checks + self.module_checks + self.eigen_checks
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl WhittakerModule<'_> {
    /// Checks on the box `⟨·,2ρ̌⟩ ≤ cutoff`:
    ///
    /// * `F(A_λ) = φ_λ`, by relabelling and through `φ₀ ⋆ A_λ`;
    /// * `(φ_ν ⋆ A_λ) ⋆ A_μ = φ_ν ⋆ (A_λ ⋆ A_μ)` for all `ν, λ, μ`;
    /// * `F(A_λ ⋆ A_μ) = F(A_λ) ⋆ A_μ`;
    /// * the eigen-residual vanishes for every `γ` and every `λ` with
    ///   `⟨λ,2ρ̌⟩ ≤ cutoff / 2`.
    pub fn verify_cs(&self, cutoff: i64, gammas: &[TorusPoint]) -> Result<CsReport> {
        let d = self.hecke.datum();
        let weights = d.dominant_coweights(cutoff, None)?;
        let mut report = CsReport::default();

        for l in &weights {
            let a = self.hecke.a(l)?;
            let phi = self.phi(l)?;
            report.transform_checks += 1;
            if self.f_transform(&a)? != phi || self.f_transform_via_action(&a)? != phi {
                report.failures.push(format!("F(A{l}) != phi{l}"));
            }
        }

        let pairs: Vec<(&Coweight, &Coweight)> = weights
            .iter()
            .flat_map(|l| weights.iter().map(move |m| (l, m)))
            .collect();
        let module_failures = pairs
            .par_iter()
            .map(|&(l, m)| -> Result<(usize, Vec<String>)> {
                let (al, am) = (self.hecke.a(l)?, self.hecke.a(m)?);
                let prod = self.hecke.mul(&al, &am)?;
                let mut bad = Vec::new();
                if self.f_transform(&prod)? != self.act(&self.f_transform(&al)?, &am)? {
                    bad.push(format!("F(A{l} * A{m}) != F(A{l}) * A{m}"));
                }
                for n in &weights {
                    let phi = self.phi(n)?;
                    let left = self.act(&self.act(&phi, &al)?, &am)?;
                    if left != self.act(&phi, &prod)? {
                        bad.push(format!("(phi{n} * A{l}) * A{m} != phi{n} * (A{l} * A{m})"));
                    }
                }
                Ok((weights.len() + 1, bad))
            })
            .collect::<Result<Vec<_>>>()?;
        for (n, bad) in module_failures {
            report.module_checks += n;
            report.failures.extend(bad);
        }

        let acting: Vec<&Coweight> = weights
            .iter()
            .filter(|l| 2 * d.level(l) <= cutoff)
            .collect();
        let jobs: Vec<(&TorusPoint, &Coweight)> = gammas
            .iter()
            .flat_map(|g| acting.iter().map(move |&l| (g, l)))
            .collect();
        let eigen = jobs
            .par_iter()
            .map(|&(g, l)| -> Result<Option<String>> {
                let r = self.eigen_residual(g, l, cutoff)?;
                Ok(r.iter().find(|(_, x)| !x.is_zero()).map(|(nu, x)| {
                    format!(
                        "eigen residual {x} at {nu} for A{l}, gamma {:?}",
                        g.values()
                    )
                }))
            })
            .collect::<Result<Vec<_>>>()?;
        report.eigen_checks = eigen.len();
        report.failures.extend(eigen.into_iter().flatten());
        Ok(report)
    }
}

/// A deterministic family of torus points with small rational entries.
pub fn sample_gammas(lattice_rank: usize, count: usize) -> Vec<TorusPoint> {
    (0..count as i64)
        .map(|k| {
            let values = (0..lattice_rank as i64)
                .map(|i| {
                    let num = 2 + (k * 7 + i * 3) % 11;
                    let den = 1 + (k * 5 + i * 2) % 7;
                    let sign = if (k + i) % 4 == 3 { -1 } else { 1 };
                    BigRational::new((sign * num).into(), den.into())
                })
                .collect();
            TorusPoint::new(values).expect("entries are nonzero")
        })
        .collect()
}

/// CSV rendering of a value table: `λ-coords, numerator, denominator, v-power`.
pub fn value_table_csv(rows: &[WhittakerValueRow]) -> String {
    let width = rows.first().map_or(0, |r| r.lambda.len());
    let mut out = String::new();
    let header: Vec<String> = (0..width).map(|k| format!("lambda_{k}")).collect();
    out.push_str(&header.join(","));
    out.push_str(",numerator,denominator,v_power\n");
    for r in rows {
        let coords: Vec<String> = r.lambda.coords().iter().map(i64::to_string).collect();
        out.push_str(&format!(
            "{},{},{},{}\n",
            coords.join(","),
            r.value.numer(),
            r.value.denom(),
            r.v_power
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::LaurentPoly;
    use crate::root_datum::RootDatum;

    fn cw(v: &[i64]) -> Coweight {
        Coweight(v.to_vec())
    }

    fn alg(p: &str) -> HeckeAlgebra {
        HeckeAlgebra::new(RootDatum::preset(p).unwrap())
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn f_sends_a_lambda_to_phi_lambda() {
        let h = alg("PGL2");
        let m = WhittakerModule::new(&h);
        for l in 0..6 {
            let a = h.a(&cw(&[l])).unwrap();
            assert_eq!(m.f_transform(&a).unwrap(), m.phi(&cw(&[l])).unwrap());
            assert_eq!(
                m.f_transform_via_action(&a).unwrap(),
                m.phi(&cw(&[l])).unwrap()
            );
        }
        assert_eq!(m.f_transform(&h.unit()).unwrap(), m.phi(&cw(&[0])).unwrap());
    }

    #[test]
    fn action_examples() {
        let h = alg("PGL2");
        let m = WhittakerModule::new(&h);
        let a1 = h.a(&cw(&[1])).unwrap();
        let out = m.act(&m.phi(&cw(&[1])).unwrap(), &a1).unwrap();
        let expected = BasisElement::from_terms(
            Basis::Phi,
            [
                (cw(&[0]), LaurentPoly::one()),
                (cw(&[2]), LaurentPoly::one()),
            ],
        );
        assert_eq!(out.element(), &expected);
        let a11 = h.mul(&a1, &a1).unwrap();
        assert_eq!(m.f_transform(&a11).unwrap().element(), &expected);
        let phi3 = m.phi(&cw(&[3])).unwrap();
        assert_eq!(m.act(&phi3, &h.unit()).unwrap(), phi3);
    }

    #[test]
    fn wrong_basis_is_rejected() {
        let h = alg("PGL2");
        let m = WhittakerModule::new(&h);
        let phi = m.phi(&cw(&[1])).unwrap();
        assert!(m.act(&phi, &h.c(&cw(&[1])).unwrap()).is_err());
        assert!(WhittakerElement::new(h.unit()).is_err());
        assert!(m.phi(&cw(&[-1])).is_err());
    }

    #[test]
    fn whittaker_values() {
        let h = alg("PGL2");
        let m = WhittakerModule::new(&h);
        let g = TorusPoint::parse("3").unwrap();
        assert_eq!(m.whittaker_value(&g, &cw(&[0])).unwrap(), RatLaurent::one());
        assert!(m.whittaker_value(&g, &cw(&[-2])).unwrap().is_zero());
        // PGL2 weights of V^1 are ±1 in Z with the coroot 2, so γ^{±1} = 3^{±1}
        assert_eq!(
            m.whittaker_value(&g, &cw(&[1])).unwrap(),
            RatLaurent::monomial(rat(10, 3), -1)
        );
    }

    #[test]
    fn eigen_residual_vanishes() {
        let h = alg("PGL2");
        let m = WhittakerModule::new(&h);
        let g = TorusPoint::parse("2").unwrap();
        for l in 0..4 {
            let r = m.eigen_residual(&g, &cw(&[l]), 10).unwrap();
            assert_eq!(r.len() as i64, (10 - l) + 1);
            assert!(r.values().all(Zero::is_zero));
        }
        let h3 = alg("SL3");
        let m3 = WhittakerModule::new(&h3);
        let g = TorusPoint::parse("2,3").unwrap();
        let r = m3.eigen_residual(&g, &cw(&[1, 0]), 8).unwrap();
        assert!(!r.is_empty());
        assert!(r.values().all(Zero::is_zero));
    }

    #[test]
    fn eigen_residual_detects_truncation_outside_window() {
        // Past the window the truncated sum really is wrong, which is why the
        // window exists.
        let h = alg("PGL2");
        let m = WhittakerModule::new(&h);
        let g = TorusPoint::parse("2").unwrap();
        let w = m.truncated_w(&g, 6).unwrap();
        let ring = h.ring();
        let a = cw(&[2]);
        let eigen = ring.character_eval(&a, &g).unwrap();
        let top = cw(&[6]);
        let mut acted = BigRational::zero();
        for (mu, c) in &w {
            acted += c * BigRational::from_integer(
                ring.tensor_multiplicity(&a, mu, &top).unwrap().into(),
            );
        }
        assert_ne!(acted, eigen * &w[&top]);
        assert!(m.eigen_residual(&g, &a, 1).is_err());
    }

    #[test]
    fn battery_passes_in_small_boxes() {
        for p in ["PGL2", "SL3"] {
            let h = alg(p);
            let m = WhittakerModule::new(&h);
            let gammas = sample_gammas(h.datum().lattice_rank(), 3);
            let r = m.verify_cs(4, &gammas).unwrap();
            assert!(r.passed(), "{p}: {:?}", r.failures);
            assert!(r.eigen_checks >= 3);
        }
    }

    #[test]
    fn csv_table() {
        let h = alg("PGL2");
        let m = WhittakerModule::new(&h);
        let g = TorusPoint::parse("2").unwrap();
        let rows = m.value_table(&g, 2, None).unwrap();
        assert_eq!(
            value_table_csv(&rows),
            "lambda_0,numerator,denominator,v_power\n0,1,1,0\n1,5,2,-1\n2,21,4,-2\n"
        );
    }
}
