//! The representation ring of the dual group: weight multiplicities,
//! dimensions, tensor product multiplicities, characters at torus points and
//! the q-analogues of weight multiplicity that feed the Satake base change.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::sync::{Arc, RwLock};

use crate::error::{Error, Result};
use crate::laurent::{rational_pow, LaurentPoly};
use crate::root_datum::{dot, Coweight, RootDatum};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// A semisimple conjugacy class `γ` of the dual group, given by its (nonzero,
/// rational) values on a Z-basis of `Λ`, so that `γ^λ = Π values_k^{λ_k}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TorusPoint {
    values: Vec<BigRational>,
}

impl TorusPoint {
    pub fn new(values: Vec<BigRational>) -> Result<Self> {
        if values.iter().any(|v| v.is_zero()) {
            return Err(Error::ZeroTorusValue);
        }
        Ok(TorusPoint { values })
    }

    pub fn from_integers(values: &[i64]) -> Result<Self> {
        Self::new(
            values
                .iter()
                .map(|&v| BigRational::from_integer(v.into()))
                .collect(),
        )
    }

    /// The identity element of the torus.
    pub fn ones(n: usize) -> Self {
        TorusPoint {
            values: vec![BigRational::one(); n],
        }
    }

    /// Parses comma separated rationals such as `2/1,3/1`.
    pub fn parse(s: &str) -> Result<Self> {
        let values = s
            .split(',')
            .map(|t| {
                let t = t.trim();
                t.parse::<BigRational>()
                    .or_else(|_| t.parse::<BigInt>().map(BigRational::from_integer))
                    .map_err(|_| Error::Parse(format!("bad rational `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(values)
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `γ^λ`.
    pub fn value_at(&self, lambda: &Coweight) -> BigRational {
        self.values
            .iter()
            .zip(lambda.coords())
            .fold(BigRational::one(), |acc, (g, &e)| acc * rational_pow(g, e))
    }
}

/// All weights of an irreducible representation with their multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightMultiplicityTable {
    highest: Coweight,
    dominant: BTreeMap<Coweight, u64>,
    mults: BTreeMap<Coweight, u64>,
}

impl WeightMultiplicityTable {
    pub fn highest(&self) -> &Coweight {
        &self.highest
    }

    /// Multiplicities of the dominant weights only.
    pub fn dominant_weights(&self) -> &BTreeMap<Coweight, u64> {
        &self.dominant
    }

    pub fn weights(&self) -> &BTreeMap<Coweight, u64> {
        &self.mults
    }

    pub fn multiplicity(&self, nu: &Coweight) -> u64 {
        self.mults.get(nu).copied().unwrap_or(0)
    }

    pub fn dimension(&self) -> u64 {
        self.mults.values().sum()
    }
}

pub type Decomposition = BTreeMap<Coweight, u64>;

/// Rep(Ǧ) for a fixed root datum, with memoised weight tables, tensor
/// decompositions and q-partition functions. Caches sit behind `RwLock`s so
/// one instance can be shared between threads.
#[derive(Debug)]
pub struct RepRing {
    datum: Arc<RootDatum>,
    tables: RwLock<HashMap<Coweight, Arc<WeightMultiplicityTable>>>,
    tensors: RwLock<HashMap<(Coweight, Coweight), Arc<Decomposition>>>,
    partitions: RwLock<HashMap<Vec<i64>, LaurentPoly>>,
}

impl RepRing {
    pub fn new(datum: RootDatum) -> Self {
        Self::from_arc(Arc::new(datum))
    }

    pub fn from_arc(datum: Arc<RootDatum>) -> Self {
        RepRing {
            datum,
            tables: RwLock::default(),
            tensors: RwLock::default(),
            partitions: RwLock::default(),
        }
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn datum_arc(&self) -> &Arc<RootDatum> {
        &self.datum
    }

    /// Weight table of `V^λ` by Freudenthal's recursion on dominant weights.
    pub fn weight_table(&self, lambda: &Coweight) -> Result<Arc<WeightMultiplicityTable>> {
        self.datum.require_dominant(lambda)?;
        if let Some(t) = self.tables.read().unwrap().get(lambda) {
            return Ok(Arc::clone(t));
        }
        let table = Arc::new(self.freudenthal(lambda));
        self.tables
            .write()
            .unwrap()
            .insert(lambda.clone(), Arc::clone(&table));
        Ok(table)
    }

    /// Dominant `μ ≤ λ`, i.e. the dominant weights of `V^λ`.
    pub fn dominant_weights_below(&self, lambda: &Coweight) -> Vec<Coweight> {
        let d = &self.datum;
        let mut seen = vec![lambda.clone()];
        let mut queue = VecDeque::from([lambda.clone()]);
        while let Some(mu) = queue.pop_front() {
            for alpha in d.positive_coroots() {
                let nu = &mu - &Coweight(alpha.clone());
                if d.is_dominant(&nu) && !seen.contains(&nu) {
                    seen.push(nu.clone());
                    queue.push_back(nu);
                }
            }
        }
        seen.sort_by(|a, b| d.level(b).cmp(&d.level(a)).then_with(|| a.cmp(b)));
        seen
    }

    fn freudenthal(&self, lambda: &Coweight) -> WeightMultiplicityTable {
        let d = &self.datum;
        let two_rho = d.two_rho_dual();
        let norm = |x: &Coweight| d.form_value(x.coords(), x.coords());
        let top = norm(lambda) + d.form_value(lambda.coords(), two_rho);

        let mut dominant: BTreeMap<Coweight, u64> = BTreeMap::new();
        for mu in self.dominant_weights_below(lambda) {
            if &mu == lambda {
                dominant.insert(mu, 1);
                continue;
            }
            let mut numerator: i64 = 0;
            for alpha in d.positive_coroots() {
                let alpha = Coweight(alpha.clone());
                let mut x = &mu + &alpha;
                loop {
                    let rep = d.dominant_representative(&x).dominant;
                    let Some(&m) = dominant.get(&rep) else { break };
                    numerator += d.form_value(x.coords(), alpha.coords()) * m as i64;
                    x = &x + &alpha;
                }
            }
            let denominator = top - norm(&mu) - d.form_value(mu.coords(), two_rho);
            debug_assert!(denominator > 0);
            debug_assert_eq!((2 * numerator) % denominator, 0);
            let m = 2 * numerator / denominator;
            if m > 0 {
                dominant.insert(mu, m as u64);
            }
        }
        let mut mults = BTreeMap::new();
        for (mu, &m) in &dominant {
            for w in d.orbit(mu) {
                mults.insert(w, m);
            }
        }
        WeightMultiplicityTable {
            highest: lambda.clone(),
            dominant,
            mults,
        }
    }

    /// `dim V^λ(ν)`.
    pub fn weight_multiplicity(&self, lambda: &Coweight, nu: &Coweight) -> Result<u64> {
        self.datum.check(nu)?;
        let table = self.weight_table(lambda)?;
        let rep = self.datum.dominant_representative(nu).dominant;
        Ok(table.dominant.get(&rep).copied().unwrap_or(0))
    }

    /// `dim V^λ(ν)` by Kostant's alternating formula; independent of the
    /// Freudenthal tables.
    pub fn weight_multiplicity_kostant(&self, lambda: &Coweight, nu: &Coweight) -> Result<u64> {
        self.datum.require_dominant(lambda)?;
        self.datum.check(nu)?;
        let d = &self.datum;
        let mu = d.dominant_representative(nu).dominant;
        let mut total = BigInt::zero();
        for w in d.weyl_group() {
            let beta = &d.dot_apply(w, lambda) - &mu;
            let count = self.kostant_partition_count(&beta);
            total += count * BigInt::from(w.sign());
        }
        u64::try_from(total).map_err(|e| Error::Invariant(format!("negative multiplicity: {e}")))
    }

    fn kostant_partition_count(&self, beta: &Coweight) -> BigInt {
        self.q_kostant_partition(beta)
            .terms()
            .map(|(_, c)| c.clone())
            .sum()
    }

    /// Weyl's dimension formula `Π_{α>0} ⟨λ+ρ, α̌⟩ / ⟨ρ, α̌⟩`.
    pub fn weyl_dim(&self, lambda: &Coweight) -> Result<BigInt> {
        let d = &self.datum;
        d.require_dominant(lambda)?;
        let two_rho = d.two_rho_dual();
        let mut value = BigRational::one();
        for r in d.positive_roots() {
            let num = 2 * dot(lambda.coords(), r) + dot(two_rho, r);
            let den = dot(two_rho, r);
            value *= BigRational::new(num.into(), den.into());
        }
        if !value.is_integer() {
            return Err(Error::Invariant(format!("non-integral dimension {value}")));
        }
        Ok(value.to_integer())
    }

    /// `V^λ ⊗ V^μ = ⊕ C^ν_{λμ} V^ν` by the Brauer–Klimyk rule.
    pub fn tensor_decompose(&self, lambda: &Coweight, mu: &Coweight) -> Result<Arc<Decomposition>> {
        self.datum.require_dominant(lambda)?;
        self.datum.require_dominant(mu)?;
        let key = if lambda <= mu {
            (lambda.clone(), mu.clone())
        } else {
            (mu.clone(), lambda.clone())
        };
        if let Some(t) = self.tensors.read().unwrap().get(&key) {
            return Ok(Arc::clone(t));
        }
        let (ta, tb) = (self.weight_table(&key.0)?, self.weight_table(&key.1)?);
        // iterate over the weights of the smaller factor
        let (base, small) = if ta.weights().len() <= tb.weights().len() {
            (&key.1, ta)
        } else {
            (&key.0, tb)
        };
        let mut acc: BTreeMap<Coweight, i64> = BTreeMap::new();
        for (tau, &m) in small.weights() {
            let shifted = base + tau;
            if let Some(rep) = self.datum.dot_dominant_representative(&shifted) {
                *acc.entry(rep.dominant).or_insert(0) += rep.sign() * m as i64;
            }
        }
        let mut out = Decomposition::new();
        for (nu, c) in acc {
            match c {
                0 => {}
                c if c > 0 => {
                    out.insert(nu, c as u64);
                }
                c => {
                    return Err(Error::Invariant(format!(
                        "negative tensor multiplicity {c} at {nu}"
                    )))
                }
            }
        }
        let out = Arc::new(out);
        self.tensors.write().unwrap().insert(key, Arc::clone(&out));
        Ok(out)
    }

    /// `C^ν_{λμ} = dim Hom(V^ν, V^λ ⊗ V^μ)`.
    pub fn tensor_multiplicity(
        &self,
        lambda: &Coweight,
        mu: &Coweight,
        nu: &Coweight,
    ) -> Result<u64> {
        self.datum.require_dominant(nu)?;
        Ok(self
            .tensor_decompose(lambda, mu)?
            .get(nu)
            .copied()
            .unwrap_or(0))
    }

    /// `Tr(γ, V^λ) = Σ_ν dim V^λ(ν) γ^ν`.
    pub fn character_eval(&self, lambda: &Coweight, gamma: &TorusPoint) -> Result<BigRational> {
        if gamma.len() != self.datum.lattice_rank() {
            return Err(Error::DimensionMismatch {
                expected: self.datum.lattice_rank(),
                got: gamma.len(),
            });
        }
        let table = self.weight_table(lambda)?;
        Ok(table
            .weights()
            .iter()
            .fold(BigRational::zero(), |acc, (nu, &m)| {
                acc + gamma.value_at(nu) * BigRational::from_integer(m.into())
            }))
    }

    /// `Tr(γ, (V^λ)*) = Tr(γ, V^{-w₀λ})`.
    pub fn dual_character_eval(
        &self,
        lambda: &Coweight,
        gamma: &TorusPoint,
    ) -> Result<BigRational> {
        self.datum.require_dominant(lambda)?;
        self.character_eval(&self.datum.dual_weight(lambda), gamma)
    }

    /// Coefficient of `e^β` in `Π_{α>0} (1 - q e^α)⁻¹`, a polynomial in `q`
    /// (stored in `v` with `q = v²`). Zero off the positive cone.
    pub fn q_kostant_partition(&self, beta: &Coweight) -> LaurentPoly {
        let Some(coords) = self.datum.coroot_coordinates(beta.coords()) else {
            return LaurentPoly::zero();
        };
        if coords.iter().any(|&c| c < 0) {
            return LaurentPoly::zero();
        }
        if let Some(p) = self.partitions.read().unwrap().get(&coords) {
            return p.clone();
        }
        let roots = self.datum.positive_coroot_coords();
        let mut memo = HashMap::new();
        let p = partition_rec(&coords, 0, roots, &mut memo);
        self.partitions.write().unwrap().insert(coords, p.clone());
        p
    }

    /// Lusztig's q-analogue `m^q_λ(μ) = Σ_w (-1)^ℓ(w) P_q(w(λ+ρ) - (μ+ρ))`.
    pub fn lusztig_q_analog(&self, lambda: &Coweight, mu: &Coweight) -> Result<LaurentPoly> {
        let d = &self.datum;
        d.require_dominant(lambda)?;
        d.require_dominant(mu)?;
        let mut out = LaurentPoly::zero();
        for w in d.weyl_group() {
            let beta = &d.dot_apply(w, lambda) - mu;
            let p = self.q_kostant_partition(&beta);
            if w.sign() > 0 {
                out += &p;
            } else {
                out -= &p;
            }
        }
        Ok(out)
    }
}

fn partition_rec(
    target: &[i64],
    idx: usize,
    roots: &[Vec<i64>],
    memo: &mut HashMap<(Vec<i64>, usize), LaurentPoly>,
) -> LaurentPoly {
    if idx == roots.len() {
        return if target.iter().all(|&c| c == 0) {
            LaurentPoly::one()
        } else {
            LaurentPoly::zero()
        };
    }
    let key = (target.to_vec(), idx);
    if let Some(p) = memo.get(&key) {
        return p.clone();
    }
    let alpha = &roots[idx];
    let mut out = LaurentPoly::zero();
    let mut rest = target.to_vec();
    let mut k = 0;
    while rest.iter().all(|&c| c >= 0) {
        let sub = partition_rec(&rest, idx + 1, roots, memo);
        out += &sub.shift(2 * k);
        for (r, a) in rest.iter_mut().zip(alpha) {
            *r -= a;
        }
        k += 1;
    }
    memo.insert(key, out.clone());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(p: &str) -> RepRing {
        RepRing::new(RootDatum::preset(p).unwrap())
    }

    fn cw(v: &[i64]) -> Coweight {
        Coweight(v.to_vec())
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn weight_multiplicity_examples() {
        let r = ring("PGL2");
        assert_eq!(r.weight_multiplicity(&cw(&[2]), &cw(&[0])).unwrap(), 1);
        assert_eq!(r.weight_multiplicity(&cw(&[2]), &cw(&[1])).unwrap(), 0);
        let r = ring("SL3");
        assert_eq!(
            r.weight_multiplicity(&cw(&[1, 1]), &cw(&[0, 0])).unwrap(),
            2
        );
        assert!(matches!(
            r.weight_multiplicity(&cw(&[-1, 1]), &cw(&[0, 0])),
            Err(Error::NotDominant(_))
        ));
    }

    #[test]
    fn freudenthal_agrees_with_kostant_on_sp4_and_g2() {
        for (p, lams) in [
            (
                "Sp4",
                vec![cw(&[1, 0]), cw(&[1, 1]), cw(&[2, 1]), cw(&[3, 1])],
            ),
            (
                "G2",
                vec![cw(&[1, 0]), cw(&[0, 1]), cw(&[1, 1]), cw(&[2, 0])],
            ),
        ] {
            let r = ring(p);
            for lam in &lams {
                let t = r.weight_table(lam).unwrap();
                for nu in t.dominant_weights().keys() {
                    assert_eq!(
                        r.weight_multiplicity(lam, nu).unwrap(),
                        r.weight_multiplicity_kostant(lam, nu).unwrap(),
                        "{p} {lam} {nu}"
                    );
                }
                assert_eq!(BigInt::from(t.dimension()), r.weyl_dim(lam).unwrap());
            }
        }
        // zero weight of the 5-dimensional representation of Sp4's dual
        let r = ring("Sp4");
        assert_eq!(r.weyl_dim(&cw(&[1, 0])).unwrap(), BigInt::from(5));
        assert_eq!(
            r.weight_multiplicity(&cw(&[1, 0]), &cw(&[0, 0])).unwrap(),
            1
        );
        assert_eq!(
            r.weight_multiplicity_kostant(&cw(&[1, 0]), &cw(&[0, 0]))
                .unwrap(),
            1
        );
    }

    #[test]
    fn weyl_dim_examples() {
        let r = ring("PGL2");
        for n in 0..6 {
            assert_eq!(r.weyl_dim(&cw(&[n])).unwrap(), BigInt::from(n + 1));
        }
        let r = ring("SL3");
        assert_eq!(r.weyl_dim(&cw(&[1, 0])).unwrap(), BigInt::from(3));
        assert_eq!(r.weyl_dim(&cw(&[1, 1])).unwrap(), BigInt::from(8));
        let r = ring("G2");
        let mut dims: Vec<BigInt> = [cw(&[1, 0]), cw(&[0, 1])]
            .iter()
            .map(|l| r.weyl_dim(l).unwrap())
            .collect();
        dims.sort();
        assert_eq!(dims, vec![BigInt::from(7), BigInt::from(14)]);
    }

    #[test]
    fn tensor_examples() {
        let r = ring("PGL2");
        let d = r.tensor_decompose(&cw(&[1]), &cw(&[1])).unwrap();
        assert_eq!(d.get(&cw(&[2])), Some(&1));
        assert_eq!(d.get(&cw(&[0])), Some(&1));
        assert_eq!(d.get(&cw(&[1])), None);
        let r = ring("SL3");
        assert_eq!(
            r.tensor_multiplicity(&cw(&[1, 0]), &cw(&[0, 1]), &cw(&[0, 0]))
                .unwrap(),
            1
        );
        assert_eq!(
            r.tensor_multiplicity(&cw(&[1, 1]), &cw(&[1, 1]), &cw(&[1, 1]))
                .unwrap(),
            2
        );
    }

    #[test]
    fn character_examples() {
        let r = ring("PGL2");
        let g = TorusPoint::from_integers(&[2]).unwrap();
        assert_eq!(r.character_eval(&cw(&[1]), &g).unwrap(), rat(5, 2));
        assert_eq!(r.character_eval(&cw(&[2]), &g).unwrap(), rat(21, 4));
        let one = TorusPoint::ones(1);
        assert_eq!(r.character_eval(&cw(&[4]), &one).unwrap(), rat(5, 1));
        assert!(TorusPoint::parse("2/1,0").is_err());
        assert_eq!(
            TorusPoint::parse("2/1, 3").unwrap(),
            TorusPoint::from_integers(&[2, 3]).unwrap()
        );
    }

    #[test]
    fn q_partition_examples() {
        let r = ring("SL3");
        assert!(r.q_kostant_partition(&cw(&[0, 0])).is_one());
        assert_eq!(r.q_kostant_partition(&cw(&[2, -1])), LaurentPoly::q_pow(1));
        // α1 + α2 = (1, 1)
        assert_eq!(
            r.q_kostant_partition(&cw(&[1, 1])),
            LaurentPoly::from_i64_terms(&[(2, 1), (4, 1)])
        );
        assert!(r.q_kostant_partition(&cw(&[-2, 1])).is_zero());
        assert!(r.q_kostant_partition(&cw(&[1, 0])).is_zero());
    }

    #[test]
    fn lusztig_rank_one_closed_form() {
        // two-element Weyl group: m^q_n(m) = q^{(n-m)/2}
        let r = ring("PGL2");
        for n in 0..8i64 {
            for m in (0..=n).rev().step_by(2) {
                assert_eq!(
                    r.lusztig_q_analog(&cw(&[n]), &cw(&[m])).unwrap(),
                    LaurentPoly::q_pow((n - m) / 2),
                    "n={n} m={m}"
                );
            }
            assert!(r.lusztig_q_analog(&cw(&[n]), &cw(&[n])).unwrap().is_one());
        }
    }
}
