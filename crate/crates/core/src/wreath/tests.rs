use super::*;
use crate::coeff::{ratfunc_equal, ExactBackend, LaurentPoly, Var};
use crate::symfunc::{vector_evaluate, wreath_pairing};

fn p(v: &[u32]) -> Partition {
    Partition::from_slice(v)
}

fn exact(r: u32, core: &[u32]) -> Wreath<ExactBackend> {
    Wreath::new(ExactBackend::new(), r, p(core), Normalization::Color0, SolveMode::Exact).unwrap()
}

fn eq(a: &RatFunc, b: &RatFunc) -> bool {
    ratfunc_equal(a, b)
}

#[test]
fn r1_two_box_examples() {
    let q = RatFunc::var(Var::Q);
    let t = RatFunc::var(Var::T);
    // multipartitions(1, 2) lists (2) before (1,1)
    assert_eq!(multipartitions(1, 2)[0].0[0], p(&[2]));
    let h2 = solve_h_exact(&p(&[2]), 1, Normalization::Color0).unwrap();
    assert!(eq(&h2[0], &RatFunc::one()) && eq(&h2[1], &q));
    let h11 = solve_h_exact(&p(&[1, 1]), 1, Normalization::Color0).unwrap();
    assert!(eq(&h11[0], &RatFunc::one()) && eq(&h11[1], &t));
}

#[test]
fn core_gives_one() {
    let w = exact(3, &[1]);
    let h = w.h(&p(&[1]), 2).unwrap();
    assert!(h.same(&ColoredSymFunc::constant(3, 2, RatFunc::one())));
    assert!(w.dagger(&p(&[1]), 2).unwrap().same(&h));
}

#[test]
fn non_core_is_rejected() {
    assert!(Wreath::new(ExactBackend::new(), 2, p(&[2]), Normalization::Color0, SolveMode::Exact).is_err());
    let w = exact(3, &[]);
    assert!(w.h(&p(&[1]), 1).is_err());
}

fn orthogonality(r: u32, core: &[u32], n: u32) {
    let w = exact(r, core);
    let b = ExactBackend::new();
    let lams = w.partitions(n).unwrap();
    for l in &lams {
        let h = w.h(l, n).unwrap();
        for m in &lams {
            let d = w.dagger(m, n).unwrap();
            let v = wreath_pairing(&d, &h, &b).unwrap();
            if l == m {
                assert!(eq(&v, &norm_expected(l, r).unwrap()), "norm {} r={}", l, r);
            } else {
                assert!(v.is_zero(), "<H_{}†, H_{}> = {}", m, l, v);
            }
        }
    }
}

#[test]
fn orthogonality_and_norm_r1() {
    orthogonality(1, &[], 2);
    orthogonality(1, &[], 3);
}

#[test]
fn orthogonality_and_norm_r3() {
    orthogonality(3, &[], 1);
    orthogonality(3, &[1], 1);
    orthogonality(3, &[], 2);
}

#[test]
fn orthogonality_and_norm_r4() {
    orthogonality(4, &[], 1);
    orthogonality(4, &[2], 1);
}

#[test]
fn all_colors_normalization_breaks_norm() {
    let w = Wreath::new(
        ExactBackend::new(),
        3,
        p(&[]),
        Normalization::AllColors,
        SolveMode::Exact,
    )
    .unwrap();
    let l = p(&[3]);
    let v = wreath_pairing(&w.dagger(&l, 1).unwrap(), &w.h(&l, 1).unwrap(), &ExactBackend::new()).unwrap();
    assert!(!eq(&v, &norm_expected(&l, 3).unwrap()));
}

#[test]
fn nabla_eigenvalues() {
    assert!(eq(
        &nabla_eigenvalue(&p(&[2]), &p(&[]), 1).unwrap(),
        &RatFunc::var(Var::Q)
    ));
    assert!(eq(&nabla_eigenvalue(&p(&[1]), &p(&[1]), 3).unwrap(), &RatFunc::one()));
    // (3) at r = 3: only the box at the origin has color 0
    assert!(eq(
        &nabla_eigenvalue(&p(&[3]), &p(&[]), 3).unwrap(),
        &RatFunc::from_int(-1)
    ));
}

#[test]
fn nabla_round_trip() {
    let w = exact(3, &[]);
    let f = w.h(&p(&[2, 1]), 1).unwrap().add(&w.h(&p(&[3]), 1).unwrap());
    let g = w.nabla(&f, false, false).unwrap();
    assert!(w.nabla(&g, false, true).unwrap().same(&f));
    let d = w.dagger(&p(&[1, 1, 1]), 1).unwrap();
    let e = w.nabla(&d, true, false).unwrap();
    assert!(e.same(&d.scale(&nabla_eigenvalue(&p(&[1, 1, 1]), &p(&[]), 3).unwrap())));
}

#[test]
fn theorem_example_r3() {
    let w = exact(3, &[]);
    let u = RatFunc::var(Var::U);
    let l = p(&[3]);
    let v = ext_pairing(&w, &l, &l, &u).unwrap();
    // u⁻¹(1 − u q⁻² t)(1 − u q³)
    let one = LaurentPoly::one();
    let uu = LaurentPoly::var(Var::U);
    let a = one.sub(&uu.mul(&LaurentPoly::qt(-2, 1)));
    let b = one.sub(&uu.mul(&LaurentPoly::qt(3, 0)));
    let want = RatFunc::from_poly(a.mul(&b)).mul(&u.inv().unwrap());
    assert!(eq(&v, &want), "{}", v);
}

#[test]
fn ext_pairing_matches_nekrasov_r3_small() {
    let u = RatFunc::var(Var::U);
    for core in [&[][..], &[1][..]] {
        let w = exact(3, core);
        let mut lams = w.partitions(0).unwrap();
        lams.extend(w.partitions(1).unwrap());
        for l in &lams {
            for m in &lams {
                let v = ext_pairing(&w, l, m, &u).unwrap();
                let e = expected_ext(l, m, 3, &u).unwrap();
                assert!(eq(&v, &e), "({}, {}): {} vs {}", l, m, v, e);
            }
        }
    }
}

#[test]
fn ext_operator_specializations() {
    let w = exact(3, &[]);
    let b = ExactBackend::new();
    let h = w.h(&p(&[2, 1]), 2).unwrap();
    let qt = RatFunc::from_poly(LaurentPoly::qt(1, 1));
    let w1 = ext_operator(&RatFunc::one(), &h, &b).unwrap();
    let mut col = vec![RatFunc::zero(); 3];
    col[0] = RatFunc::one().sub(&qt);
    assert!(w1.same(&crate::symfunc::translation_apply(&col, &h, &b).unwrap()));
    let wq = ext_operator(&qt.inv().unwrap(), &h, &b).unwrap();
    let k = crate::symfunc::PlethysmMatrix::pairing_kernel_inverse(3).unwrap();
    let col: Vec<RatFunc> = k.column(0).iter().map(|x| x.mul(&RatFunc::one().sub(&qt))).collect();
    assert!(wq.same(&crate::symfunc::omega_multiply(&col, &h, &b).unwrap()));
    let one = ColoredSymFunc::constant(3, 2, RatFunc::one());
    let w_one = ext_operator(&RatFunc::var(Var::U), &one, &b).unwrap();
    assert!(w_one.component(0).same(&one));
}

#[test]
fn delta_property() {
    let b = ExactBackend::new();
    for (r, lam) in [(1, p(&[2])), (1, p(&[])), (3, p(&[3])), (3, p(&[1]))] {
        let e = delta_series(&lam, r, 2, false, &b).unwrap();
        let es = delta_series(&lam, r, 2, true, &b).unwrap();
        assert!(e.component(0).same(&ColoredSymFunc::constant(r, 2, RatFunc::one())));
        let d = crate::charsum::d_sum(&lam, r).unwrap();
        let dbar = d.bar();
        let qt = LaurentPoly::qt(1, 1);
        // f[ι D^•] and f[−qt ι D̄^•]: color i receives the color −i part
        let iota = |x: &LaurentPoly| -> Vec<RatFunc> {
            (0..r)
                .map(|i| {
                    let j = (r - i) % r;
                    RatFunc::from_poly(crate::charsum::color_part_poly(x, r, j))
                })
                .collect()
        };
        let v = iota(d.poly());
        let vs = iota(&dbar.poly().mul(&qt).neg());
        for n in 0..=2 {
            for (nu, s) in crate::symfunc::schur_basis(r, n, 2, &b).unwrap() {
                let lhs = wreath_pairing(&s, &e, &b).unwrap();
                let rhs = vector_evaluate(&s, &v, &b).unwrap();
                assert!(eq(&lhs, &rhs), "r={} {} {}: {} vs {}", r, lam, nu, lhs, rhs);
                let lhs = wreath_pairing(&s, &es, &b).unwrap();
                let rhs = vector_evaluate(&s, &vs, &b).unwrap();
                assert!(eq(&lhs, &rhs), "starred r={} {} {}: {} vs {}", r, lam, nu, lhs, rhs);
            }
        }
    }
}

#[test]
fn tesler_r1_small() {
    let w = exact(1, &[]);
    for lam in [p(&[]), p(&[1]), p(&[2])] {
        let n = lam.size();
        let cap = n + 2;
        let v = v_operator(&w, &w.h(&lam, cap).unwrap(), false, cap).unwrap();
        let e = delta_series(&lam, 1, cap, false, w.backend()).unwrap();
        assert!(v.same(&e), "V H_{}: {:?}", lam, v.first_difference(&e));
        let vs = v_operator(&w, &w.dagger(&lam, cap).unwrap(), true, cap).unwrap();
        let es = delta_series(&lam, 1, cap, true, w.backend()).unwrap();
        assert!(vs.same(&es), "V* H_{}†: {:?}", lam, vs.first_difference(&es));
    }
}

#[test]
fn pieri_r3_degree_one() {
    let w = exact(3, &[]);
    let b = ExactBackend::new();
    let core = p(&[]);
    for lam in w.partitions(1).unwrap() {
        let got = pieri_skew(&w, &lam, 1).unwrap();
        let want = pieri_skew_expected(&core, &lam, 3, 1).unwrap();
        let c = PieriCheck::compare(&b, &lam, 1, &got, &want).unwrap();
        assert!(c.ok(), "skew {}: {:?}", lam, c.mismatch);
        let id = pieri_skew(&w, &lam, 0).unwrap();
        assert_eq!(id.len(), 1);
    }
    let got = pieri_mult(&w, &core, 1).unwrap();
    let want = pieri_mult_expected(&core, &core, 3, 1).unwrap();
    assert_eq!(want.len(), 3);
    let c = PieriCheck::compare(&b, &core, 1, &got, &want).unwrap();
    assert!(c.ok(), "mult: {:?}", c.mismatch);
}

#[test]
fn table_cache_round_trip() {
    let dir = std::env::temp_dir().join(format!("wreath-cache-test-{}", std::process::id()));
    let (t, hit) = WreathBasisTable::load_or_compute(Some(&dir), 3, &p(&[]), 1, Normalization::Color0).unwrap();
    assert!(!hit);
    let (t2, hit) = WreathBasisTable::load_or_compute(Some(&dir), 3, &p(&[]), 1, Normalization::Color0).unwrap();
    assert!(hit);
    assert_eq!(t.entries.len(), t2.entries.len());
    for (a, b) in t.entries.iter().zip(&t2.entries) {
        assert_eq!(a.lambda, b.lambda);
        assert!(a.schur.iter().zip(&b.schur).all(|(x, y)| eq(x, y)));
    }
    assert_eq!(t.powersum().unwrap().len(), 3);
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn expansion_methods_agree_at_a_point() {
    use crate::coeff::{PointBackend, PointConfig};
    let pt = crate::coeff::random_eval_point(7, &[], &PointConfig::default()).unwrap();
    let w = Wreath::new(
        PointBackend::new(pt),
        3,
        p(&[]),
        Normalization::Color0,
        SolveMode::Exact,
    )
    .unwrap();
    let f = w.h(&p(&[2, 1]), 2).unwrap().mul(&w.h(&p(&[3]), 2).unwrap());
    for dagger in [false, true] {
        let a = w.expand(&f, dagger).unwrap();
        let b = w.expand_by_solve(&f, dagger).unwrap();
        assert_eq!(a, b);
    }
}
