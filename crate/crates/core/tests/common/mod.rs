//! Fixtures, strategies and property checks shared by the property suite and
//! the acceptance runner.

#![allow(dead_code)]

use std::sync::OnceLock;

use num_rational::BigRational;
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;
use satake_core::{
    Basis, BasisElement, Coweight, HeckeAlgebra, LaurentPoly, RootDatum, TorusPoint,
    WhittakerModule,
};

pub struct Fixture {
    pub hecke: HeckeAlgebra,
    pub weights: Vec<Coweight>,
}

pub const PRESETS: &[(&str, usize)] = &[
    ("PGL2", 6),
    ("SL2", 4),
    ("GL2", 6),
    ("SL3", 6),
    ("Sp4", 5),
    ("G2", 4),
];

pub fn fixtures() -> &'static [Fixture] {
    static F: OnceLock<Vec<Fixture>> = OnceLock::new();
    F.get_or_init(|| {
        PRESETS
            .iter()
            .map(|&(name, n)| {
                let d = RootDatum::preset(name).unwrap();
                let bound = if d.is_semisimple() { None } else { Some(2) };
                let weights = d
                    .dominant_coweights(24, bound)
                    .unwrap()
                    .into_iter()
                    .take(n)
                    .collect();
                Fixture {
                    hecke: HeckeAlgebra::new(d),
                    weights,
                }
            })
            .collect()
    })
}

pub type Triple = (usize, BasisElement, BasisElement, BasisElement);

fn arb_coeff() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-3i64..=3, -3i64..=3), 1..3)
        .prop_map(|t| LaurentPoly::from_i64_terms(&t))
}

fn arb_element(p: usize, basis: Basis) -> impl Strategy<Value = BasisElement> {
    let n = fixtures()[p].weights.len();
    prop::collection::vec((0..n, arb_coeff()), 0..3).prop_map(move |terms| {
        BasisElement::from_terms(
            basis,
            terms
                .into_iter()
                .map(|(i, c)| (fixtures()[p].weights[i].clone(), c)),
        )
    })
}

/// A preset together with three random elements in the given basis.
pub fn arb_triple(basis: Basis) -> impl Strategy<Value = Triple> {
    (0..PRESETS.len()).prop_flat_map(move |p| {
        (
            Just(p),
            arb_element(p, basis),
            arb_element(p, basis),
            arb_element(p, basis),
        )
    })
}

pub fn arb_semisimple_preset() -> impl Strategy<Value = usize> {
    (0..PRESETS.len()).prop_filter("semisimple", |&p| {
        fixtures()[p].hecke.datum().is_semisimple()
    })
}

pub fn arb_gamma(rank: usize) -> impl Strategy<Value = TorusPoint> {
    prop::collection::vec((1i64..6, 1i64..6, any::<bool>()), rank).prop_map(|v| {
        let s: Vec<String> = v
            .into_iter()
            .map(|(n, d, neg)| format!("{}{n}/{d}", if neg { "-" } else { "" }))
            .collect();
        TorusPoint::parse(&s.join(",")).unwrap()
    })
}

pub fn arb_small_coords() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-3i64..=3, 2)
}

pub fn check_ring_axioms((p, x, y, z): Triple) -> Result<(), TestCaseError> {
    let h = &fixtures()[p].hecke;
    let xy = h.mul(&x, &y).unwrap();
    prop_assert_eq!(&xy, &h.mul(&y, &x).unwrap());
    prop_assert_eq!(
        h.mul(&xy, &z).unwrap(),
        h.mul(&x, &h.mul(&y, &z).unwrap()).unwrap()
    );
    prop_assert_eq!(h.mul(&h.unit(), &x).unwrap(), x.clone());
    let left = h.mul(&x, &y.try_add(&z).unwrap()).unwrap();
    let right = xy.try_add(&h.mul(&x, &z).unwrap()).unwrap();
    prop_assert_eq!(left, right);
    Ok(())
}

pub fn check_module_axioms((p, x, y, z): Triple) -> Result<(), TestCaseError> {
    let h = &fixtures()[p].hecke;
    let m = WhittakerModule::new(h);
    let w = m.f_transform(&z).unwrap();
    let lhs = m.act(&m.act(&w, &x).unwrap(), &y).unwrap();
    let rhs = m.act(&w, &h.mul(&x, &y).unwrap()).unwrap();
    prop_assert_eq!(lhs, rhs);
    // F is a module map and both ways of computing it agree
    let fx = m.f_transform(&x).unwrap();
    prop_assert_eq!(&fx, &m.f_transform_via_action(&x).unwrap());
    prop_assert_eq!(
        m.f_transform(&h.mul(&x, &y).unwrap()).unwrap(),
        m.act(&fx, &y).unwrap()
    );
    Ok(())
}

pub fn check_round_trip(
    (p, x, c): (usize, BasisElement, BasisElement),
) -> Result<(), TestCaseError> {
    let h = &fixtures()[p].hecke;
    let back = h.c_to_satake(&h.satake_to_c(&x).unwrap()).unwrap();
    prop_assert_eq!(back, x);
    let back = h.satake_to_c(&h.c_to_satake(&c).unwrap()).unwrap();
    prop_assert_eq!(back, c);
    Ok(())
}

/// A preset with one element in the `A`-basis and one in the `c`-basis.
pub fn arb_round_trip() -> impl Strategy<Value = (usize, BasisElement, BasisElement)> {
    (0..PRESETS.len())
        .prop_flat_map(|p| (Just(p), arb_element(p, Basis::A), arb_element(p, Basis::C)))
}

pub fn check_weyl_invariance((p, i, w_idx): (usize, usize, usize)) -> Result<(), TestCaseError> {
    let f = &fixtures()[p];
    let d = f.hecke.datum();
    let lambda = &f.weights[i % f.weights.len()];
    let w = &d.weyl_group()[w_idx % d.weyl_group().len()];
    let table = f.hecke.ring().weight_table(lambda).unwrap();
    for (nu, &m) in table.weights() {
        prop_assert_eq!(table.multiplicity(&d.apply(w, nu)), m);
    }
    prop_assert_eq!(
        table.dimension(),
        u64::try_from(f.hecke.ring().weyl_dim(lambda).unwrap()).unwrap()
    );
    Ok(())
}

pub fn check_dominance_order(
    (p, a, b, c): (usize, Vec<i64>, Vec<i64>, Vec<i64>),
) -> Result<(), TestCaseError> {
    let d = fixtures()[p].hecke.datum();
    let r = d.lattice_rank();
    let (x, y, z) = (
        Coweight::new(&a[..r]),
        Coweight::new(&b[..r]),
        Coweight::new(&c[..r]),
    );
    prop_assert!(d.dominance_leq(&x, &x));
    if d.dominance_leq(&x, &y) && d.dominance_leq(&y, &x) {
        prop_assert_eq!(&x, &y);
    }
    if d.dominance_leq(&x, &y) && d.dominance_leq(&y, &z) {
        prop_assert!(d.dominance_leq(&x, &z));
    }
    // compatible with translation by the coroot lattice
    if d.dominance_leq(&x, &y) {
        let shift = Coweight::new(d.simple_coroots()[0].clone());
        prop_assert!(d.dominance_leq(&(&x - &shift), &y));
        prop_assert!(!d.dominance_leq(&(&y + &shift), &x));
    }
    Ok(())
}

pub fn check_freudenthal_kostant(
    (p, i, coords): (usize, usize, Vec<i64>),
) -> Result<(), TestCaseError> {
    let f = &fixtures()[p];
    let d = f.hecke.datum();
    let lambda = &f.weights[i % f.weights.len()];
    let nu = Coweight::new(&coords[..d.lattice_rank()]);
    let ring = f.hecke.ring();
    prop_assert_eq!(
        ring.weight_multiplicity(lambda, &nu).unwrap(),
        ring.weight_multiplicity_kostant(lambda, &nu).unwrap()
    );
    Ok(())
}

fn restrict(g: &TorusPoint, d: &RootDatum) -> TorusPoint {
    TorusPoint::new(g.values()[..d.lattice_rank()].to_vec()).unwrap()
}

pub fn check_whittaker_values((p, i, g): (usize, usize, TorusPoint)) -> Result<(), TestCaseError> {
    let f = &fixtures()[p];
    let d = f.hecke.datum();
    let gamma = restrict(&g, d);
    let lambda = &f.weights[i % f.weights.len()];
    let m = WhittakerModule::new(&f.hecke);
    let value = m
        .whittaker_value(&gamma, lambda)
        .unwrap()
        .shift(d.level(lambda));
    let expected = f
        .hecke
        .ring()
        .character_eval(&d.dual_weight(lambda), &gamma)
        .unwrap();
    prop_assert!(value.num_terms() <= 1);
    prop_assert_eq!(value.coeff(0), expected);
    Ok(())
}

pub fn check_characters_multiplicative(
    (p, i, j, g): (usize, usize, usize, TorusPoint),
) -> Result<(), TestCaseError> {
    let f = &fixtures()[p];
    let d = f.hecke.datum();
    let gamma = restrict(&g, d);
    let (l, m) = (
        &f.weights[i % f.weights.len()],
        &f.weights[j % f.weights.len()],
    );
    let ring = f.hecke.ring();
    let lhs = ring.character_eval(l, &gamma).unwrap() * ring.character_eval(m, &gamma).unwrap();
    let mut rhs = BigRational::from_integer(0.into());
    for (nu, &c) in ring.tensor_decompose(l, m).unwrap().iter() {
        rhs += ring.character_eval(nu, &gamma).unwrap() * BigRational::from_integer(c.into());
    }
    prop_assert_eq!(lhs, rhs);
    Ok(())
}
