//! The spherical Hecke algebra with its two bases.
//!
//! `c_λ` is the characteristic function of the double coset of `λ(t)`, and
//! `A_λ` is the image of `[V^λ]` under the Satake isomorphism. Products are
//! computed in the `A`-basis through Rep(Ǧ); the `c`-basis is reached by the
//! unitriangular base change
//!
//! ```text
//! A_λ = q^{-⟨λ,ρ̌⟩} (c_λ + Σ_{μ<λ} p_{λμ}(q) c_μ),   p_{λμ}(q) = q^{⟨λ-μ,ρ̌⟩} m^q_λ(μ)(q⁻¹)
//! ```
//!
//! with `m^q_λ(μ)` Lusztig's q-analogue of weight multiplicity.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, RatLaurent};
use crate::rep_ring::{RepRing, TorusPoint};
use crate::root_datum::{Coweight, RootDatum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Basis {
    #[serde(rename = "A")]
    A,
    #[serde(rename = "C")]
    C,
    #[serde(rename = "PHI")]
    Phi,
}

impl Basis {
    pub fn name(self) -> &'static str {
        match self {
            Basis::A => "A",
            Basis::C => "C",
            Basis::Phi => "PHI",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A finite combination `Σ coeff_λ · b_λ` of basis vectors indexed by
/// dominant coweights, with Laurent-polynomial coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisElement {
    basis: Basis,
    terms: BTreeMap<Coweight, LaurentPoly>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    coweight: Coweight,
    coeff: LaurentPoly,
}

#[derive(Serialize, Deserialize)]
struct ElementJson {
    basis: Basis,
    terms: Vec<TermJson>,
}

impl BasisElement {
    pub fn zero(basis: Basis) -> Self {
        BasisElement {
            basis,
            terms: BTreeMap::new(),
        }
    }

    /// The basis vector `b_λ` with coefficient 1.
    pub fn basis_vector(basis: Basis, lambda: Coweight) -> Self {
        Self::monomial(basis, lambda, LaurentPoly::one())
    }

    pub fn monomial(basis: Basis, lambda: Coweight, coeff: LaurentPoly) -> Self {
        let mut e = Self::zero(basis);
        e.add_term(lambda, &coeff);
        e
    }

    pub fn from_terms(
        basis: Basis,
        terms: impl IntoIterator<Item = (Coweight, LaurentPoly)>,
    ) -> Self {
        let mut e = Self::zero(basis);
        for (l, c) in terms {
            e.add_term(l, &c);
        }
        e
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Coweight, LaurentPoly> {
        &self.terms
    }

    pub fn coeff(&self, lambda: &Coweight) -> LaurentPoly {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, lambda: Coweight, coeff: &LaurentPoly) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(lambda.clone()).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&lambda);
        }
    }

    pub fn scale(&self, s: &LaurentPoly) -> Self {
        Self::from_terms(
            self.basis,
            self.terms.iter().map(|(l, c)| (l.clone(), c * s)),
        )
    }

    /// Same coefficients, different basis label.
    pub fn relabel(&self, basis: Basis) -> Self {
        BasisElement {
            basis,
            terms: self.terms.clone(),
        }
    }

    pub fn expect_basis(&self, basis: Basis) -> Result<()> {
        if self.basis == basis {
            Ok(())
        } else {
            Err(Error::BasisMismatch {
                expected: basis.name(),
                got: self.basis.name(),
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        other.expect_basis(self.basis)?;
        let mut out = self.clone();
        for (l, c) in &other.terms {
            out.add_term(l.clone(), c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.scale(&-LaurentPoly::one()))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(ElementJson {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .map(|(l, c)| TermJson {
                    coweight: l.clone(),
                    coeff: c.clone(),
                })
                .collect(),
        })
        .expect("element serialises")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let e: ElementJson = serde_json::from_value(v.clone())?;
        Ok(Self::from_terms(
            e.basis,
            e.terms.into_iter().map(|t| (t.coweight, t.coeff)),
        ))
    }
}

impl fmt::Display for BasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let sym = match self.basis {
            Basis::A => "A",
            Basis::C => "c",
            Basis::Phi => "phi",
        };
        for (i, (l, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "{sym}{l}")?;
            } else {
                write!(f, "({c}) {sym}{l}")?;
            }
        }
        Ok(())
    }
}

/// One row of the base change: `p_{λμ}(q)` for the dominant `μ ≤ λ`.
pub type SatakeRow = BTreeMap<Coweight, LaurentPoly>;

/// The spherical Hecke algebra of a fixed root datum.
#[derive(Debug)]
pub struct HeckeAlgebra {
    ring: Arc<RepRing>,
    rows: RwLock<HashMap<Coweight, Arc<SatakeRow>>>,
}

impl HeckeAlgebra {
    pub fn new(datum: RootDatum) -> Self {
        Self::from_ring(Arc::new(RepRing::new(datum)))
    }

    pub fn from_ring(ring: Arc<RepRing>) -> Self {
        HeckeAlgebra {
            ring,
            rows: RwLock::default(),
        }
    }

    pub fn ring(&self) -> &RepRing {
        &self.ring
    }

    pub fn ring_arc(&self) -> &Arc<RepRing> {
        &self.ring
    }

    pub fn datum(&self) -> &RootDatum {
        self.ring.datum()
    }

    /// Rejects elements with non-dominant or wrongly sized support.
    pub fn validate(&self, h: &BasisElement) -> Result<()> {
        h.terms
            .keys()
            .try_for_each(|l| self.datum().require_dominant(l))
    }

    /// `A₀ = c₀`, the characteristic function of `G(O)`.
    pub fn unit(&self) -> BasisElement {
        BasisElement::basis_vector(Basis::A, Coweight::zero(self.datum().lattice_rank()))
    }

    pub fn a(&self, lambda: &Coweight) -> Result<BasisElement> {
        self.datum().require_dominant(lambda)?;
        Ok(BasisElement::basis_vector(Basis::A, lambda.clone()))
    }

    pub fn c(&self, lambda: &Coweight) -> Result<BasisElement> {
        self.datum().require_dominant(lambda)?;
        Ok(BasisElement::basis_vector(Basis::C, lambda.clone()))
    }

    /// `A_λ ⋆ A_μ = Σ_ν C^ν_{λμ} A_ν`, extended bilinearly.
    pub fn mul(&self, h1: &BasisElement, h2: &BasisElement) -> Result<BasisElement> {
        h1.expect_basis(Basis::A)?;
        h2.expect_basis(Basis::A)?;
        self.validate(h1)?;
        self.validate(h2)?;
        let mut out = BasisElement::zero(Basis::A);
        for (l, a) in &h1.terms {
            for (m, b) in &h2.terms {
                let ab = a * b;
                for (nu, &c) in self.ring.tensor_decompose(l, m)?.iter() {
                    out.add_term(nu.clone(), &ab.scale(&c.into()));
                }
            }
        }
        Ok(out)
    }

    /// `p_{λμ}` for every dominant `μ ≤ λ` (zero entries omitted).
    pub fn satake_row(&self, lambda: &Coweight) -> Result<Arc<SatakeRow>> {
        self.datum().require_dominant(lambda)?;
        if let Some(r) = self.rows.read().unwrap().get(lambda) {
            return Ok(Arc::clone(r));
        }
        let d = self.datum();
        let mut row = SatakeRow::new();
        for mu in self.ring.dominant_weights_below(lambda) {
            let m = self.ring.lusztig_q_analog(lambda, &mu)?;
            let p = m.invert_variable().shift(d.level(lambda) - d.level(&mu));
            if !p.is_zero() {
                row.insert(mu, p);
            }
        }
        let row = Arc::new(row);
        self.rows
            .write()
            .unwrap()
            .insert(lambda.clone(), Arc::clone(&row));
        Ok(row)
    }

    /// Seeds the memo table, e.g. from an on-disk cache.
    pub fn insert_satake_row(&self, lambda: Coweight, row: SatakeRow) {
        self.rows.write().unwrap().insert(lambda, Arc::new(row));
    }

    /// `p_{λμ}(q)`, zero unless `μ ≤ λ`.
    pub fn p_poly(&self, lambda: &Coweight, mu: &Coweight) -> Result<LaurentPoly> {
        self.datum().require_dominant(mu)?;
        Ok(self
            .satake_row(lambda)?
            .get(mu)
            .cloned()
            .unwrap_or_default())
    }

    /// The `c`-expansion of `A_λ`: coefficient of `c_μ` is `v^{-⟨λ,2ρ̌⟩} p_{λμ}`.
    pub fn a_in_c(&self, lambda: &Coweight) -> Result<BasisElement> {
        let shift = -self.datum().level(lambda);
        let row = self.satake_row(lambda)?;
        Ok(BasisElement::from_terms(
            Basis::C,
            row.iter().map(|(mu, p)| (mu.clone(), p.shift(shift))),
        ))
    }

    pub fn satake_to_c(&self, h: &BasisElement) -> Result<BasisElement> {
        h.expect_basis(Basis::A)?;
        let mut out = BasisElement::zero(Basis::C);
        for (l, a) in &h.terms {
            for (mu, c) in &self.a_in_c(l)?.terms {
                out.add_term(mu.clone(), &(a * c));
            }
        }
        Ok(out)
    }

    /// Inverse of [`satake_to_c`](Self::satake_to_c), by back substitution
    /// from the top of the dominance order.
    pub fn c_to_satake(&self, h: &BasisElement) -> Result<BasisElement> {
        h.expect_basis(Basis::C)?;
        self.validate(h)?;
        let d = self.datum();
        let mut rest = h.clone();
        let mut out = BasisElement::zero(Basis::A);
        while let Some((lambda, coeff)) = rest
            .terms
            .iter()
            .max_by(|a, b| d.level(a.0).cmp(&d.level(b.0)).then_with(|| a.0.cmp(b.0)))
            .map(|(l, c)| (l.clone(), c.clone()))
        {
            // c_λ = v^{⟨λ,2ρ̌⟩} A_λ - Σ_{μ<λ} p_{λμ} c_μ
            let k = coeff.shift(d.level(&lambda));
            out.add_term(lambda.clone(), &k);
            let expansion = self.a_in_c(&lambda)?.scale(&k);
            rest = rest.try_sub(&expansion)?;
            if rest.terms.contains_key(&lambda) {
                return Err(Error::Invariant(format!(
                    "base change is not unitriangular at {lambda}"
                )));
            }
        }
        Ok(out)
    }

    /// Product in the `c`-basis, by conjugating the `A`-basis structure constants.
    pub fn c_mul(&self, h1: &BasisElement, h2: &BasisElement) -> Result<BasisElement> {
        let a = self.mul(&self.c_to_satake(h1)?, &self.c_to_satake(h2)?)?;
        self.satake_to_c(&a)
    }

    /// `A_λ ↦ A_{-w₀λ}`, induced by `g ↦ g⁻¹`.
    pub fn star(&self, h: &BasisElement) -> Result<BasisElement> {
        h.expect_basis(Basis::A)?;
        self.validate(h)?;
        let d = self.datum();
        Ok(BasisElement::from_terms(
            Basis::A,
            h.terms.iter().map(|(l, c)| (d.dual_weight(l), c.clone())),
        ))
    }

    /// `γ(h) = Σ coeff_λ · Tr(γ, V^λ)`, with `v` left symbolic.
    pub fn eval_gamma(&self, h: &BasisElement, gamma: &TorusPoint) -> Result<RatLaurent> {
        h.expect_basis(Basis::A)?;
        let mut out = RatLaurent::zero();
        for (l, c) in &h.terms {
            let chi = self.ring.character_eval(l, gamma)?;
            out += &c.to_rational().scale(&chi);
        }
        Ok(out)
    }

    /// `γ(h)` specialised at a rational `q`; fails if an odd power of `v` survives.
    pub fn eval_gamma_at(
        &self,
        h: &BasisElement,
        gamma: &TorusPoint,
        q: &BigRational,
    ) -> Result<BigRational> {
        self.eval_gamma(h, gamma)?.eval_q(q)
    }
}
