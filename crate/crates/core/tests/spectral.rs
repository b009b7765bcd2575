mod common;


use gammacert::algebra::interval::{dyadic_eps, rat};
use gammacert::graphs::{build, enumerate_connected_graphs};
use gammacert::spectral::vectors::{gamma_of_mix, perturb, perturbation_threshold, reverse_am_qm_bound};
use gammacert::spectral::{beta_d, gamma_enclosure, gamma_of, lambda_enclosure, Perron};
use num_rational::BigRational;
use proptest::prelude::*;

fn positive_vec(len: std::ops::Range<usize>) -> impl Strategy<Value = Vec<BigRational>> {
    proptest::collection::vec((1i64..200, 1i64..20).prop_map(|(n, d)| rat(n, d)), len)
}

fn all_small_graphs() -> impl Iterator<Item = gammacert::graphs::Graph> {
    (1..=7).flat_map(|n| enumerate_connected_graphs(n).unwrap())
}

#[test]
fn gamma_minus_one_at_least_lambda_for_all_small_graphs() {
    for g in all_small_graphs() {
        let p = Perron::new(&g).unwrap();
        assert!(p.gamma_minus_one_ge_lambda(), "{g}");
    }
}

#[test]
fn master_weight_and_degree_sandwich_for_all_small_graphs() {
    for g in all_small_graphs() {
        let p = Perron::new(&g).unwrap();
        for o in p.masters() {
            assert!(p.master_weight_bound(o), "{g} at {o}");
            assert!(p.degree_sandwich(o), "{g} at {o}");
        }
    }
}

#[test]
fn degree_bound_for_all_small_graphs() {
    let eps = dyadic_eps(40);
    for g in all_small_graphs() {
        let p = Perron::new(&g).unwrap();
        let d = p.masters().into_iter().map(|o| g.degree(o)).max().unwrap();
        if d < 3 {
            continue;
        }
        let gamma = p.gamma_enclosure(&eps);
        let bd = beta_d(d, &eps).unwrap();
        let root_bound = {
            let x = &gamma.lo - rat(3, 1);
            x > rat(0, 1) && &x * &x >= rat(4 * d as i64, 1)
        };
        assert!(gamma.lo >= bd.hi || root_bound, "{g}: Γ ≈ {} below β_{d} ≈ {}", gamma.mid_f64(), bd.mid_f64());
    }
}

#[test]
fn cycles_and_regular_graphs_have_gamma_n() {
    for n in 3..=12 {
        assert_eq!(Perron::new(&build::cycle(n)).unwrap().gamma_exact(), Some(rat(n as i64, 1)));
    }
    assert_eq!(Perron::new(&build::complete(6)).unwrap().gamma_exact(), Some(rat(6, 1)));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn gamma_is_quasiconcave(x in positive_vec(2..8), seed in proptest::collection::vec((1i64..200, 1i64..20), 8), a in 0i64..=10) {
        let y: Vec<BigRational> = seed.iter().take(x.len()).map(|&(n, d)| rat(n, d)).collect();
        let alpha = rat(a, 10);
        let lo = gamma_of(&x).min(gamma_of(&y));
        prop_assert!(gamma_of_mix(&x, &y, &alpha) >= lo);
    }

    #[test]
    fn reverse_am_qm_lower_bound(x in positive_vec(1..10)) {
        let m = x.iter().min().unwrap().clone();
        let big_m = x.iter().max().unwrap().clone();
        prop_assume!(m < big_m);
        prop_assert!(reverse_am_qm_bound(&x, &m, &big_m) <= gamma_of(&x));
    }

    #[test]
    fn lowering_a_light_entry_lowers_gamma(x in positive_vec(2..8), i in 0usize..8, frac in 1i64..10) {
        let i = i % x.len();
        prop_assume!(x[i] < perturbation_threshold(&x));
        let eps = &x[i] * rat(frac, 10);
        prop_assert!(gamma_of(&perturb(&x, i, &eps)) < gamma_of(&x));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn enclosures_survive_relabeling(g in common::connected_graph(2, 9), perm in common::permutation(9)) {
        let perm: Vec<usize> = perm.into_iter().filter(|&v| v < g.n()).collect();
        let h = g.permute(&perm);
        let eps = dyadic_eps(40);
        let (a, b) = (gamma_enclosure(&g, &eps).unwrap(), gamma_enclosure(&h, &eps).unwrap());
        prop_assert!(a.value.overlaps(&b.value));
        prop_assert_eq!(lambda_enclosure(&g, &eps).unwrap(), lambda_enclosure(&h, &eps).unwrap());
        prop_assert_eq!(Perron::new(&g).unwrap().cmp_gamma(&gammacert::Beta::ratio(5, 1)), Perron::new(&h).unwrap().cmp_gamma(&gammacert::Beta::ratio(5, 1)));
    }
}
