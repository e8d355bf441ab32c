//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Runs without the libtest harness so the report is always printed.

mod common;

use std::process::ExitCode;

use common::{clustered, increasing, newton_poly, power_poly, rel_err, rng};
use divdiff::analysis::MEAN_VALUE_GRID;
use divdiff::function::{Exp, FromFn, Monomial, Reciprocal, Sin};
use divdiff::opitz::complete_homogeneous;
use divdiff::*;
use rand::Rng;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn seq(t: &[f64]) -> NodeSequence {
    NodeSequence::new(t.to_vec()).unwrap()
}

fn reciprocal_closed_form() -> Outcome {
    let t = [1.0, 2.0, 4.0];
    let table = divided_difference_of(&Reciprocal, &t).unwrap();
    let chakalov = chakalov_weights(&seq(&t)).apply(&Reciprocal).unwrap();
    let closed = reciprocal_dd(&t).unwrap();
    let worst = [table, chakalov, closed]
        .iter()
        .map(|v| (v - 0.125).abs() / 0.125)
        .fold(0.0, f64::max);
    outcome(worst <= 1e-14, format!("max rel err {worst:.3e}"))
}

fn erdos_turan() -> Outcome {
    let mut worst_eq: f64 = 0.0;
    for n in 2..=8 {
        let bound = 2f64.powi(n as i32 - 2);
        let norm = functional_norm(&chebyshev_extreme_sites(n)).unwrap();
        worst_eq = worst_eq.max((norm - bound).abs() / bound);
    }
    let mut r = rng(2);
    let mut violations = 0;
    for _ in 0..100 {
        let n = r.random_range(2..=8);
        let t = increasing(&mut r, n, -1.0, 1.0);
        let bound = 2f64.powi(n as i32 - 2);
        if functional_norm(&t).unwrap() < bound * (1.0 - 1e-12) {
            violations += 1;
        }
    }
    outcome(
        worst_eq <= 1e-10 && violations == 0,
        format!("equality rel err {worst_eq:.3e}, {violations}/100 below the bound"),
    )
}

fn opitz_matches_table() -> Outcome {
    let mut r = rng(3);
    let mut worst: f64 = 0.0;
    for _ in 0..50 {
        let t = clustered(&mut r, 8, 3, -1.0, 1.0);
        let deg = r.random_range(0..=10);
        let p = power_poly(&mut r, deg);
        let table = DDTable::build(&sample_function(&p, &t).unwrap());
        let m = matrix_polynomial(&p, &opitz_matrix(&t));
        for i in 0..t.len() {
            for j in 0..=i {
                worst = worst.max(rel_err(m[(i, j)], table.get(j, i)));
            }
        }
    }
    outcome(worst <= 1e-10, format!("max rel dev {worst:.3e} over 50 cases"))
}

fn leibniz_matches_product() -> Outcome {
    let mut r = rng(4);
    let mut worst: f64 = 0.0;
    for _ in 0..50 {
        let t = clustered(&mut r, 7, 3, -1.0, 1.0);
        let (dp, dq) = (r.random_range(0..=5), r.random_range(0..=5));
        let p = power_poly(&mut r, dp);
        let q = power_poly(&mut r, dq);
        let split = leibniz_dd(&sample_function(&p, &t).unwrap(), &sample_function(&q, &t).unwrap()).unwrap();
        let direct = divided_difference(&sample_function(&p.mul(&q), &t).unwrap());
        worst = worst.max(rel_err(split, direct));
    }
    outcome(worst <= 1e-10, format!("max rel err {worst:.3e} over 50 cases"))
}

fn five_way_agreement() -> Outcome {
    let cfg = QuadratureConfig::default();
    let mut worst: f64 = 0.0;
    for t in [seq(&[0.0, 0.5, 1.0]), seq(&[0.0, 0.0, 1.0])] {
        let mut values = vec![
            divided_difference_of(&Exp, t.nodes()).unwrap(),
            chakalov_weights(&t).apply(&Exp).unwrap(),
            genocchi_dd(&Exp, &t, &cfg).unwrap(),
            contour_dd(&Exp, &t, &cfg).unwrap().value,
        ];
        if t.is_distinct() {
            values.push(determinant_dd(&sample_function(&Exp, &t).unwrap()).unwrap());
        }
        for a in &values {
            for b in &values {
                worst = worst.max((a - b).abs());
            }
        }
    }
    outcome(worst <= 1e-8, format!("max pairwise gap {worst:.3e}"))
}

fn peano_bspline() -> Outcome {
    let cfg = QuadratureConfig::default();
    let knots = seq(&[0.0, 1.0, 3.0]);
    let f = Monomial(4);
    let direct = divided_difference_of(&f, knots.nodes()).unwrap();
    let peano = peano_dd(&f, &knots, &cfg).unwrap();
    let integral = bspline_integral(&knots, &cfg).unwrap();
    let step = 3.0 / (MEAN_VALUE_GRID - 1) as f64;
    let negative = (0..MEAN_VALUE_GRID)
        .filter(|&i| bspline_eval(step * i as f64, &knots).unwrap() < 0.0)
        .count();
    let (e1, e2) = ((peano - direct).abs(), (integral - 1.0).abs());
    outcome(
        e1 <= 1e-9 && e2 <= 1e-10 && negative == 0,
        format!("peano err {e1:.3e}, integral err {e2:.3e}, {negative} negative samples"),
    )
}

fn hermite_conditions() -> Outcome {
    let mut r = rng(7);
    let mut worst: f64 = 0.0;
    for _ in 0..50 {
        let t = clustered(&mut r, 7, 3, -1.0, 1.0);
        let y: Vec<f64> = (0..t.len()).map(|_| r.random_range(-1.0..1.0)).collect();
        let data = HermiteDataset::new(t.clone(), y.clone()).unwrap();
        let p = hermite_interpolant(&data);
        for (j, (&tj, &mu)) in t.nodes().iter().zip(t.mult_index()).enumerate() {
            worst = worst.max(rel_err(derivative_at(&p, tj, mu), y[j]));
        }
    }
    outcome(worst <= 1e-10, format!("max rel err {worst:.3e} over 50 datasets"))
}

fn floater_hopf() -> Outcome {
    let mut r = rng(8);
    let mut worst_floater: f64 = 0.0;
    let mut worst_leibniz: f64 = 0.0;
    let mut worst_hopf: f64 = 0.0;
    for _ in 0..20 {
        let n = r.random_range(1..=5);
        let m = r.random_range(1..=n.min(3));
        let s: Vec<f64> = (0..m).map(|_| r.random_range(0.0..1.0)).collect();
        let t: Vec<f64> = (0..n).map(|_| r.random_range(0.0..1.0)).collect();
        let e = floater_expansion(&s, &t, &Exp).unwrap();
        let scale = e.direct.abs();
        worst_floater = worst_floater.max((e.truncation + e.e_floater - e.direct).abs() / scale);
        worst_leibniz = worst_leibniz.max((e.truncation + e.e_leibniz - e.direct).abs() / scale);

        let t_m: Vec<f64> = (0..m).map(|_| r.random_range(0.0..1.0)).collect();
        let exact = divided_difference_of(&Exp, &s).unwrap() - divided_difference_of(&Exp, &t_m).unwrap();
        worst_hopf = worst_hopf.max((hopf_anchor(&s, &t_m, &Exp).unwrap() - exact).abs());
    }
    outcome(
        worst_floater <= 1e-9 && worst_leibniz <= 1e-9 && worst_hopf <= 1e-11,
        format!("floater {worst_floater:.3e}, leibniz form {worst_leibniz:.3e}, hopf {worst_hopf:.3e}"),
    )
}

fn refinement() -> Outcome {
    let mut r = rng(9);
    let mut all_positive = true;
    let mut worst_sum: f64 = 0.0;
    let mut worst_rec: f64 = 0.0;
    for _ in 0..30 {
        let n = r.random_range(2..=8);
        let t = increasing(&mut r, n, -1.0, 1.0);
        let k = r.random_range(1..=n);
        let mut sigma = rand::seq::index::sample(&mut r, n, k).into_vec();
        sigma.sort_unstable();
        let alpha = refine_coeffs(&t, &sigma).unwrap();
        all_positive &= alpha.iter().all(|&(_, a)| a > 0.0);
        worst_sum = worst_sum.max((alpha.iter().map(|&(_, a)| a).sum::<f64>() - 1.0).abs());

        let deg = r.random_range(0..k + 3);
        let p = power_poly(&mut r, deg);
        let sub: Vec<f64> = sigma.iter().map(|&i| t[i]).collect();
        let lhs = divided_difference_of(&p, &sub).unwrap();
        let rhs: f64 = alpha
            .iter()
            .map(|&(j, a)| a * divided_difference_of(&p, &t[j..j + k]).unwrap())
            .sum();
        worst_rec = worst_rec.max(rel_err(rhs, lhs));
    }
    outcome(
        all_positive && worst_sum <= 1e-12 && worst_rec <= 1e-10,
        format!("weights positive: {all_positive}, sum err {worst_sum:.3e}, reconstruction err {worst_rec:.3e}"),
    )
}

fn monomial_formula() -> Outcome {
    let mut r = rng(10);
    let mut worst: f64 = 0.0;
    for _ in 0..20 {
        let t = clustered(&mut r, 6, 3, -1.5, 1.5);
        for k in 0..=10 {
            let table = divided_difference_of(&Monomial(k), t.nodes()).unwrap();
            worst = worst.max(rel_err(monomial_dd(t.nodes(), k), table));
        }
    }
    // exponent check on a hand case: [1, 2, 3] x^4 = h_2(1, 2, 3) = 25
    let hand = monomial_dd(&[1.0, 2.0, 3.0], 4) == complete_homogeneous(&[1.0, 2.0, 3.0], 2);
    outcome(
        worst <= 1e-10 && hand,
        format!("max rel err {worst:.3e} for k <= 10, exponent k - n + 1"),
    )
}

fn mean_value_and_affine() -> Outcome {
    let mut r = rng(11);
    let mut failures = 0;
    for _ in 0..20 {
        let t = clustered(&mut r, 6, 2, -2.0, 2.0);
        for bracket in [mean_value_check(&Exp, &t).unwrap(), mean_value_check(&Sin, &t).unwrap()] {
            if !bracket.holds() {
                failures += 1;
            }
        }
    }
    let mut worst: f64 = 0.0;
    for _ in 0..20 {
        let t = clustered(&mut r, 6, 2, -1.0, 1.0);
        let a: f64 = r.random_range(0.2..2.0) * if r.random_bool(0.5) { 1.0 } else { -1.0 };
        let b = r.random_range(-1.0..1.0);
        // g(x) = exp(a x + b)
        let g = FromFn::new(usize::MAX, |m, x: f64| a.powi(m as i32) * (a * x + b).exp());
        let lhs = divided_difference_of(&g, t.nodes()).unwrap();
        let mapped: Vec<f64> = t.nodes().iter().map(|&x| a * x + b).collect();
        let rhs = a.powi(t.len() as i32 - 1) * divided_difference_of(&Exp, &mapped).unwrap();
        worst = worst.max(rel_err(lhs, rhs));
    }
    outcome(
        failures == 0 && worst <= 1e-10,
        format!("{failures}/40 brackets violated, change of variables err {worst:.3e}"),
    )
}

fn horner_and_rebase() -> Outcome {
    let mut r = rng(12);
    let mut worst_hat: f64 = 0.0;
    let mut worst_rebase: f64 = 0.0;
    for _ in 0..50 {
        let len = r.random_range(1..=8);
        let p = newton_poly(&mut r, len);
        let z = loop {
            let z: f64 = r.random_range(-1.0..1.0);
            if p.centers().iter().all(|c| (c - z).abs() > 0.05) {
                break z;
            }
        };
        let h = horner_eval(&p, z);
        for j in 0..len {
            let mut nodes = vec![z];
            nodes.extend_from_slice(&p.centers()[..j]);
            let fresh = divided_difference_of(&p, &nodes).unwrap();
            worst_hat = worst_hat.max(rel_err(h.hatc[j], fresh));
        }

        let centers: Vec<f64> = (0..len - 1).map(|_| r.random_range(-1.0..1.0)).collect();
        let q = change_basis(&p, &centers).unwrap();
        for _ in 0..10 {
            let x = r.random_range(-1.5..1.5);
            worst_rebase = worst_rebase.max(rel_err(q.eval(x), p.eval(x)));
        }
    }
    outcome(
        worst_hat <= 1e-11 && worst_rebase <= 1e-11,
        format!("hat c err {worst_hat:.3e}, rebase err {worst_rebase:.3e}"),
    )
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("reciprocal closed form", reciprocal_closed_form),
        ("Erdos-Turan norm equality and bound", erdos_turan),
        ("Opitz matrix equals the table", opitz_matches_table),
        ("Leibniz rule equals the product", leibniz_matches_product),
        ("five-way representation agreement", five_way_agreement),
        ("Peano kernel and B-spline", peano_bspline),
        ("Hermite interpolation conditions", hermite_conditions),
        ("Floater expansion and Hopf anchor", floater_hopf),
        ("refinement weights", refinement),
        ("monomial formula", monomial_formula),
        ("mean value bracket and change of variables", mean_value_and_affine),
        ("Horner coefficients and basis change", horner_and_rebase),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        let tag = if o.pass { "PASS" } else { "FAIL" };
        println!("{tag} criterion {}: {name} ({})", i + 1, o.detail);
        if !o.pass {
            failed += 1;
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
