
use super::*;
use crate::combinatorics::{gen_indifference, gen_tall_schroder, DyckPath};
use crate::symfunc::{check_symmetric, to_monomial};

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn lp(s: &str) -> LaurentPoly {
    s.parse().unwrap()
}

fn sch(s: &str) -> SchroderPath {
    s.parse().unwrap()
}

#[test]
fn ascent_examples() {
    let g = EdgeSet::from_pairs(4, &[(1, 2), (2, 3), (1, 3), (3, 4)]).unwrap();
    assert_eq!(asc(&g, &[2, 5, 1, 5]).unwrap(), 2);
    assert_eq!(asc(&EdgeSet::empty(3).unwrap(), &[3, 1, 2]).unwrap(), 0);
    let k = EdgeSet::complete(5).unwrap();
    assert_eq!(asc(&k, &[1, 2, 3, 4, 5]).unwrap(), 10);
    assert!(asc(&k, &[1, 2]).is_err());
}

#[test]
fn csf_examples() {
    let path = IndiffGraph::from_pairs(3, &[(1, 2), (2, 3)]).unwrap();
    let x = csf(&path).unwrap();
    assert_eq!(x.coeff(&p(&[2, 1])), lp("t"));
    assert_eq!(x.coeff(&p(&[1, 1, 1])), lp("t^2 + 4*t + 1"));
    assert_eq!(x.coeff(&p(&[3])), lp("0"));
    let one = csf(&IndiffGraph::edgeless(1).unwrap()).unwrap();
    assert_eq!(one, SymPoly::monomial(p(&[1])));
    let k2 = csf(&IndiffGraph::complete(2).unwrap()).unwrap();
    assert_eq!(k2, SymPoly::monomial(p(&[1, 1])).scale(&lp("t + 1")));
    assert_eq!(csf(&IndiffGraph::edgeless(0).unwrap()).unwrap(), SymPoly::constant(lp("1")));
}

#[test]
fn complete_graph_is_t_factorial_times_e_n() {
    let tables = BasisTables::new();
    let e = e_expansion_x(&tables, &IndiffGraph::complete(3).unwrap()).unwrap();
    assert_eq!(e.coeff(&p(&[3])), lp("t + 1") * lp("t^2 + t + 1"));
    assert_eq!(e.terms().count(), 1);
}

#[test]
fn e_positivity_of_small_graphs() {
    let tables = BasisTables::new();
    let path = IndiffGraph::from_pairs(3, &[(1, 2), (2, 3)]).unwrap();
    assert!(positivity_violations(&e_expansion_x(&tables, &path).unwrap()).is_empty());
    for n in 0..=3 {
        let e = e_expansion_x(&tables, &IndiffGraph::edgeless(n).unwrap()).unwrap();
        assert!(e.terms().all(|(_, c)| c.is_constant()));
    }
}

#[test]
fn llt_examples() {
    let g = llt_vertical(&sch("EEDSS")).unwrap();
    assert_eq!(g.coeff(&p(&[2, 1])), lp("t"));
    assert_eq!(g.coeff(&p(&[1, 1, 1])), lp("t^2 + 2*t"));
    assert_eq!(g.coeff(&p(&[3])), lp("0"));
    for n in 1..=4 {
        let g = llt_vertical(&SchroderPath::e_d_s(n).unwrap()).unwrap();
        assert_eq!(g, SymPoly::monomial(Partition::column(n)), "n={n}");
        // The staircase has no constraints and no ascents: p_1^n.
        let st = llt_vertical(&DyckPath::staircase(n).to_schroder()).unwrap();
        let p1n = (1..n).fold(SymPoly::monomial(p(&[1])), |acc, _| acc.mul(&SymPoly::monomial(p(&[1]))));
        assert_eq!(st, p1n);
    }
}

#[test]
fn coloring_tables_are_symmetric() {
    for n in 1..=4 {
        for g in gen_indifference(n).unwrap() {
            assert!(check_symmetric(n, &csf_exponent_table(&g).unwrap()));
        }
        for s in gen_tall_schroder(n).unwrap() {
            assert!(check_symmetric(n, &llt_exponent_table(&s).unwrap()));
        }
    }
}

#[test]
fn as_expansion_small() {
    assert_eq!(as_expansion(&sch("ES")).unwrap(), SymFunc::unit(Basis::E, p(&[1])));
    assert_eq!(as_expansion(&sch("EDS")).unwrap(), SymFunc::unit(Basis::E, p(&[2])));
    let a = as_expansion(&sch("EEDSS")).unwrap();
    assert_eq!(a.coeff(&p(&[3])), lp("t^2 - t"));
    assert_eq!(a.coeff(&p(&[2, 1])), lp("t"));
}

#[test]
fn as_expansion_matches_llt_size_three() {
    let tables = BasisTables::new();
    for s in gen_tall_schroder(3).unwrap() {
        let a = to_monomial(&tables, &as_expansion(&s).unwrap()).unwrap();
        assert_eq!(a, llt_vertical(&s).unwrap(), "σ={s}");
    }
}

#[test]
fn palindromic_size_five() {
    for g in gen_indifference(5).unwrap() {
        assert!(palindromicity_check(&g).unwrap(), "γ={g}");
    }
    assert!(palindromicity_check(&IndiffGraph::edgeless(2).unwrap()).unwrap());
}

#[test]
fn d_coefficients_round_trip_and_positivity() {
    let tables = BasisTables::new();
    for n in 0..=4 {
        for g in gen_indifference(n).unwrap() {
            let d = d_coeffs(&tables, &g).unwrap();
            let back = crate::symfunc::to_monomial_t(
                &tables,
                &SymFunc::new(n, Basis::PT, d.iter().map(|(l, c)| (l.clone(), RatFunc::from(c.clone())))).unwrap(),
            )
            .unwrap();
            assert_eq!(back, csf(&g).unwrap().map(|c| RatFunc::from(c.clone())));
            for c in d.values() {
                let scaled = c.shift(-(g.len() as i64));
                assert!(scaled.is_nonneg_integer_poly(), "γ={g}: {c}");
            }
        }
    }
}

#[test]
fn size_guards() {
    let big = IndiffGraph::edgeless(7).unwrap();
    assert!(matches!(palindromicity_check(&big), Err(Error::SizeGuard { .. })));
    assert!(matches!(d_coeffs(&BasisTables::new(), &big), Err(Error::SizeGuard { .. })));
    assert!(IndiffGraph::edgeless(9).is_err());
}
