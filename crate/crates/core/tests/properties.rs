use proptest::prelude::*;
use num_traits::Zero;

use unichrom_core::combinatorics::{
    gen_dyck, gen_indifference, gen_partitions, gen_tall_schroder, mobius_subgraph, DyckPath, Partition,
    SchroderPath,
};
use unichrom_core::exactnum::{format_rational, parse_rational, ratio, BigRational, LaurentPoly, RatFunc};
use unichrom_core::symfunc::{convert, omega, to_monomial, Basis, BasisTables, SymFunc};

fn rational() -> impl Strategy<Value = BigRational> {
    (-20i64..=20, 1i64..=6).prop_map(|(p, q)| ratio(p, q))
}

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    (-3i64..=3, prop::collection::vec(rational(), 0..5)).prop_map(|(low, c)| LaurentPoly::new(low, c))
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (laurent(), laurent().prop_filter("nonzero", |d| !d.is_zero()))
        .prop_map(|(n, d)| RatFunc::new(n, d).unwrap())
}

/// Evaluation points avoiding 0 and the roots of unity.
fn point() -> impl Strategy<Value = BigRational> {
    prop_oneof![Just(ratio(2, 1)), Just(ratio(-3, 1)), Just(ratio(1, 2)), Just(ratio(5, 3))]
}

fn sym_func(n: usize) -> impl Strategy<Value = SymFunc<BigRational>> {
    let parts = gen_partitions(n).unwrap();
    let k = parts.len();
    (prop::sample::select(Basis::ALL[..5].to_vec()), prop::collection::vec(rational(), k))
        .prop_map(move |(b, cs)| SymFunc::new(n, b, parts.iter().cloned().zip(cs)).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn laurent_ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn ratfunc_field_axioms(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if !b.is_zero() {
            prop_assert_eq!(&(&a / &b) * &b, a.clone());
        }
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in laurent(), b in laurent(), q in point()) {
        let (x, y) = (a.eval(&q).unwrap(), b.eval(&q).unwrap());
        prop_assert_eq!((&a + &b).eval(&q).unwrap(), &x + &y);
        prop_assert_eq!((&a * &b).eval(&q).unwrap(), &x * &y);
        let f = RatFunc::from(a.clone());
        prop_assert_eq!(f.eval(&q).unwrap(), x);
    }

    #[test]
    fn ratfunc_evaluation_respects_products(a in ratfunc(), b in ratfunc(), q in point()) {
        if let (Ok(x), Ok(y)) = (a.eval(&q), b.eval(&q)) {
            prop_assert_eq!((&a * &b).eval(&q).unwrap(), x * y);
        }
    }

    #[test]
    fn text_round_trips(a in laurent(), f in ratfunc(), r in rational()) {
        prop_assert_eq!(a.to_string().parse::<LaurentPoly>().unwrap(), a);
        prop_assert_eq!(f.to_string().parse::<RatFunc>().unwrap(), f);
        prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
    }

    #[test]
    fn path_round_trips(n in 0usize..=5, k in any::<prop::sample::Index>()) {
        let all = gen_tall_schroder(n).unwrap();
        let s = &all[k.index(all.len())];
        prop_assert_eq!(&s.to_string().parse::<SchroderPath>().unwrap(), s);
        let dyck = gen_dyck(n).unwrap();
        let d = &dyck[k.index(dyck.len())];
        prop_assert_eq!(&d.to_string().parse::<DyckPath>().unwrap(), d);
    }

    #[test]
    fn transpose_is_an_involution(n in 0usize..=8, k in any::<prop::sample::Index>()) {
        let parts = gen_partitions(n).unwrap();
        let l: &Partition = &parts[k.index(parts.len())];
        prop_assert_eq!(&l.transpose().transpose(), l);
        prop_assert_eq!(l.transpose().size(), n);
    }

    #[test]
    fn omega_is_an_involution(
        f in (1usize..=5).prop_flat_map(sym_func),
        b in prop::sample::select(vec![Basis::E, Basis::H, Basis::P, Basis::S]),
    ) {
        let tables = BasisTables::new();
        let g = convert(&tables, &f, b).unwrap();
        let w = omega(&g).unwrap();
        prop_assert_eq!(&omega(&w).unwrap(), &g);
        // The result does not depend on the basis it was computed in.
        let via_p = omega(&convert(&tables, &f, Basis::P).unwrap()).unwrap();
        prop_assert_eq!(to_monomial(&tables, &w).unwrap(), to_monomial(&tables, &via_p).unwrap());
    }

    #[test]
    fn basis_changes_preserve_the_function(
        f in (1usize..=5).prop_flat_map(sym_func),
        b in prop::sample::select(Basis::ALL[..5].to_vec()),
    ) {
        let tables = BasisTables::new();
        let g = convert(&tables, &f, b).unwrap();
        prop_assert_eq!(g.basis(), b);
        prop_assert_eq!(to_monomial(&tables, &g).unwrap(), to_monomial(&tables, &f).unwrap());
    }

    #[test]
    fn mobius_sums_vanish(n in 1usize..=5, k in any::<prop::sample::Index>()) {
        let all = gen_indifference(n).unwrap();
        let g = &all[k.index(all.len())];
        let mu = mobius_subgraph(g).unwrap();
        let total: i64 = mu.values().sum();
        prop_assert_eq!(total, i64::from(g.is_empty()));
    }
}
