//! Brute-force check, for `PGL₂` over `F_q((t))`, of
//!
//! ```text
//! ∫_{N(K)} A_λ(n⁻¹ ν(t)) χ_μ(n) dn = q^{-⟨ν,ρ̌⟩} C^{μ+ν}_{λμ}
//! ```
//!
//! by enumerating the `F_q`-points of the affine cells
//! `Ḡr^m ∩ S^n = { n(t)·t^n : n(t) = Σ_{i=(n-m)/2}^{n-1} a_i t^i }` and summing
//! Artin–Schreier character values.
//!
//! Normalisation: the point of `S^n` labelled by `n(t)` is the coset of
//! `N(O)` translated by `ν(t)`, whose measure is `q^{-⟨ν,2ρ̌⟩} = q^{-n}` when
//! `N(O)` has measure 1. Every point therefore carries the weight `q^{-n}`.
//!
//! Two evaluation paths are provided: literal enumeration with values in
//! `Z[ζ_p]`, and the closed form (a sum with a free `ψ`-coordinate vanishes,
//! a sum without one counts points).

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use crate::cyclotomic::{is_prime, CharValue, SqrtQValue};
use crate::error::{Error, Result};
use crate::hecke::HeckeAlgebra;
use crate::laurent::LaurentPoly;
use crate::root_datum::Coweight;

/// The cell `Ḡr^m ∩ S^n ≅ A^{(n+m)/2}` with coordinates `a_i`,
/// `(n-m)/2 ≤ i ≤ n-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Rank1Cell {
    pub m: i64,
    pub n: i64,
    pub dim: i64,
    pub first_index: i64,
}

impl Rank1Cell {
    /// Indices of the coordinates `a_i`, ascending.
    pub fn coordinates(&self) -> std::ops::Range<i64> {
        self.first_index..self.n
    }

    pub fn has_coordinate(&self, j: i64) -> bool {
        self.coordinates().contains(&j)
    }

    /// Index of the coordinate read by `χ_μ` on `S^n`.
    pub fn character_index(mu: i64) -> i64 {
        -1 - mu
    }

    /// `q^{dim}` as an exact count.
    pub fn point_count(&self, q: u64) -> BigInt {
        BigInt::from(q).pow(self.dim as u32)
    }
}

/// The cell for `(m, n)`, or `None` when `m`, `n` differ in parity or `|n| > m`.
pub fn cell(m: i64, n: i64) -> Option<Rank1Cell> {
    if m < 0 || (m - n).rem_euclid(2) != 0 || n.abs() > m {
        return None;
    }
    Some(Rank1Cell {
        m,
        n,
        dim: (n + m) / 2,
        first_index: (n - m) / 2,
    })
}

/// Calls `f` on every point of `F_p^dim`.
fn for_each_point(p: u64, dim: usize, mut f: impl FnMut(&[u64])) {
    let mut point = vec![0u64; dim];
    loop {
        f(&point);
        let mut k = 0;
        loop {
            if k == dim {
                return;
            }
            point[k] += 1;
            if point[k] < p {
                break;
            }
            point[k] = 0;
            k += 1;
        }
    }
}

/// Literal count of the `F_p`-points of the closed cell.
pub fn enumerate_point_count(m: i64, n: i64, p: u64) -> u64 {
    let Some(c) = cell(m, n) else { return 0 };
    let mut count = 0;
    for_each_point(p, c.dim as usize, |_| count += 1);
    count
}

/// `Σ ψ(a_j)` over the `F_p`-points of the locally closed stratum
/// `Gr^m ∩ S^n`, by enumeration. The stratum is the closed cell minus the
/// closed cell for `m - 2`, which sits inside it as `a_{(n-m)/2} = 0`.
pub fn stratum_char_sum(m: i64, n: i64, mu: i64, p: u64) -> Result<CharValue> {
    let mut sum = CharValue::zero(p)?;
    let Some(c) = cell(m, n) else { return Ok(sum) };
    let j = Rank1Cell::character_index(mu);
    let smaller = cell(m - 2, n);
    for_each_point(p, c.dim as usize, |a| {
        // a[k] is the coordinate a_{first_index + k}
        if smaller.is_some() && a[0] == 0 {
            return;
        }
        if c.has_coordinate(j) {
            sum.add_zeta_pow(a[(j - c.first_index) as usize] as i64, &BigInt::from(1));
        } else {
            sum.add_zeta_pow(0, &BigInt::from(1));
        }
    });
    Ok(sum)
}

/// Closed form of `Σ ψ(a_j)` over the closed cell, as a polynomial in `q`
/// (stored in `v`): zero when the coordinate is free, `q^{dim}` when absent.
pub fn closed_cell_char_sum(m: i64, n: i64, mu: i64) -> LaurentPoly {
    match cell(m, n) {
        None => LaurentPoly::zero(),
        Some(c) if c.has_coordinate(Rank1Cell::character_index(mu)) => LaurentPoly::zero(),
        Some(c) => LaurentPoly::q_pow(c.dim),
    }
}

/// One line of the oracle report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Eq2Entry {
    pub lambda: i64,
    pub mu: i64,
    pub nu: i64,
    pub q: u64,
    pub lhs: String,
    pub rhs: String,
    pub lhs_closed_form: String,
    pub pass_enumerated: bool,
    pub pass_closed_form: bool,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Eq2Report {
    pub entries: Vec<Eq2Entry>,
}

impl Eq2Report {
    pub fn passed(&self) -> usize {
        self.entries.iter().filter(|e| e.pass).count()
    }

    pub fn total(&self) -> usize {
        self.entries.len()
    }

    pub fn all_pass(&self) -> bool {
        self.passed() == self.total()
    }

    pub fn failures(&self) -> impl Iterator<Item = &Eq2Entry> {
        self.entries.iter().filter(|e| !e.pass)
    }
}

pub struct Rank1Oracle<'a> {
    hecke: &'a HeckeAlgebra,
    overrides: BTreeMap<(i64, i64), LaurentPoly>,
}

impl<'a> Rank1Oracle<'a> {
    /// Needs the `PGL₂` datum: `Λ = Z` with simple coroot 2.
    pub fn new(hecke: &'a HeckeAlgebra) -> Result<Self> {
        let d = hecke.datum();
        if d.simple_coroots() != [vec![2]] || d.simple_roots() != [vec![1]] {
            return Err(Error::Precondition(format!(
                "the rank-1 oracle needs the PGL2 datum, got {}",
                d.label()
            )));
        }
        Ok(Rank1Oracle {
            hecke,
            overrides: BTreeMap::new(),
        })
    }

    /// Replaces `p_{m,m'}` by `p` in every weight, to check that the oracle
    /// notices a wrong base change.
    pub fn with_p_override(mut self, m: i64, m_prime: i64, p: LaurentPoly) -> Self {
        self.overrides.insert((m, m_prime), p);
        self
    }

    /// Value of `A_m` on `Gr^{m'}`: `v^{-m} p_{m,m'}(q)`, read off the
    /// `c`-expansion of `A_m`.
    pub fn ic_weight(&self, m: i64, m_prime: i64) -> Result<LaurentPoly> {
        if m_prime < 0 || m_prime > m || (m - m_prime) % 2 != 0 {
            return Err(Error::Precondition(format!(
                "no stratum Gr^{m_prime} in the closure of Gr^{m}"
            )));
        }
        if let Some(p) = self.overrides.get(&(m, m_prime)) {
            return Ok(p.shift(-m));
        }
        let a = self.hecke.a_in_c(&Coweight::new([m]))?;
        Ok(a.coeff(&Coweight::new([m_prime])))
    }

    /// The strata `m' ≤ m` of `Ḡr^m` meeting `S^n`.
    pub fn strata(&self, m: i64, n: i64) -> Vec<i64> {
        (0..=m)
            .rev()
            .filter(|&mp| (m - mp) % 2 == 0 && cell(mp, n).is_some())
            .collect()
    }

    fn check_admissible(&self, m: i64, mu: i64, n: i64) -> Result<()> {
        if m < 0 {
            return Err(Error::Precondition(format!("λ = {m} is not dominant")));
        }
        if mu + n < 0 {
            return Err(Error::Precondition(format!(
                "χ_{mu} is not admissible on S^{n}"
            )));
        }
        Ok(())
    }

    /// Left side as a Laurent polynomial, from the closed-form cell sums.
    pub fn eq2_lhs_closed_form(&self, m: i64, mu: i64, n: i64) -> Result<LaurentPoly> {
        self.check_admissible(m, mu, n)?;
        let mut out = LaurentPoly::zero();
        for mp in self.strata(m, n) {
            let stratum = &closed_cell_char_sum(mp, n, mu) - &closed_cell_char_sum(mp - 2, n, mu);
            out += &(&self.ic_weight(m, mp)? * &stratum);
        }
        Ok(out.shift(-2 * n))
    }

    /// Left side at the prime `q`, by enumerating points with `ψ(a) = ζ_q^a`.
    pub fn eq2_lhs_enumerated(&self, m: i64, mu: i64, n: i64, q: u64) -> Result<SqrtQValue> {
        self.check_admissible(m, mu, n)?;
        let q_rat = BigRational::from_integer(q.into());
        let mut out = SqrtQValue::zero(q)?;
        for mp in self.strata(m, n) {
            let sum = stratum_char_sum(mp, n, mu, q)?;
            let weight = self.ic_weight(m, mp)?.shift(-2 * n).eval_sqrt_q(&q_rat)?;
            out.add_product(&weight, &sum);
        }
        Ok(out)
    }

    /// Right side `v^{-n} C^{μ+n}_{m,μ}`, zero for non-dominant `μ`.
    pub fn eq2_rhs(&self, m: i64, mu: i64, n: i64) -> Result<LaurentPoly> {
        self.check_admissible(m, mu, n)?;
        if mu < 0 {
            return Ok(LaurentPoly::zero());
        }
        let c = self.hecke.ring().tensor_multiplicity(
            &Coweight::new([m]),
            &Coweight::new([mu]),
            &Coweight::new([mu + n]),
        )?;
        Ok(LaurentPoly::monomial(c.into(), -n))
    }

    /// All admissible triples with `0 ≤ m ≤ m_max` and `|μ| ≤ m_max`, in order.
    pub fn triples(m_max: i64) -> Vec<(i64, i64, i64)> {
        let mut out = Vec::new();
        for m in 0..=m_max {
            for n in (-m..=m).filter(|n| (m - n) % 2 == 0) {
                for mu in (-m_max..=m_max).filter(|mu| mu + n >= 0) {
                    out.push((m, mu, n));
                }
            }
        }
        out
    }

    pub fn check_triple(&self, m: i64, mu: i64, n: i64, q: u64) -> Result<Eq2Entry> {
        let rhs = self.eq2_rhs(m, mu, n)?;
        let closed = self.eq2_lhs_closed_form(m, mu, n)?;
        let enumerated = self.eq2_lhs_enumerated(m, mu, n, q)?;
        let rhs_at_q = SqrtQValue::from_rational_pair(
            q,
            &rhs.eval_sqrt_q(&BigRational::from_integer(q.into()))?,
        )?;
        let pass_enumerated = enumerated == rhs_at_q;
        let pass_closed_form = closed == rhs;
        Ok(Eq2Entry {
            lambda: m,
            mu,
            nu: n,
            q,
            lhs: enumerated.to_string(),
            rhs: rhs.to_string(),
            lhs_closed_form: closed.to_string(),
            pass_enumerated,
            pass_closed_form,
            pass: pass_enumerated && pass_closed_form,
        })
    }

    /// Runs every admissible triple for every `q` (which must be prime).
    pub fn verify_eq2(&self, m_max: i64, primes: &[u64]) -> Result<Eq2Report> {
        if let Some(&q) = primes.iter().find(|&&q| !is_prime(q)) {
            return Err(Error::Precondition(format!(
                "q = {q} is not a prime; only prime fields are supported"
            )));
        }
        // warm the memo tables before going parallel
        for m in 0..=m_max {
            self.hecke.satake_row(&Coweight::new([m]))?;
        }
        let jobs: Vec<(u64, (i64, i64, i64))> = primes
            .iter()
            .flat_map(|&q| Self::triples(m_max).into_iter().map(move |t| (q, t)))
            .collect();
        let mut entries = jobs
            .par_iter()
            .map(|&(q, (m, mu, n))| self.check_triple(m, mu, n, q))
            .collect::<Result<Vec<_>>>()?;
        entries.sort_by_key(|e| (e.q, e.lambda, e.mu, e.nu));
        Ok(Eq2Report { entries })
    }
}
