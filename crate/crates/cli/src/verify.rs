//! The `verify` suite: every identity checked on seeded random inputs.
//!
//! Each check draws from its own stream of one ChaCha generator, so a
//! report depends only on the seed and trial count.

use divdiff::analysis::{QuadratureConfig, MEAN_VALUE_GRID};
use divdiff::function::{Exp, FromFn, Monomial, Reciprocal, Sin};
use divdiff::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::format::num;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyOptions {
    pub seed: u64,
    pub trials: usize,
    /// Added to one side of every comparison; only for exercising failure.
    pub perturb: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub name: &'static str,
    /// Largest error seen, or infinity when a qualitative property failed.
    pub worst: f64,
    pub tol: f64,
}

impl CheckResult {
    pub fn pass(&self) -> bool {
        self.worst <= self.tol
    }
}

struct Ctx {
    rng: ChaCha8Rng,
    trials: usize,
    perturb: f64,
}

impl Ctx {
    /// `|a + perturb - b| / max(|b|, 1)`.
    fn err(&self, a: f64, b: f64) -> f64 {
        (a + self.perturb - b).abs() / b.abs().max(1.0)
    }

    fn abs_err(&self, a: f64, b: f64) -> f64 {
        (a + self.perturb - b).abs()
    }

    fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        self.rng.random_range(lo..hi)
    }

    fn int(&mut self, lo: usize, hi: usize) -> usize {
        self.rng.random_range(lo..=hi)
    }

    /// Sorted sites at least `gap` apart.
    fn sites(&mut self, count: usize, lo: f64, hi: f64, gap: f64) -> Vec<f64> {
        loop {
            let mut s: Vec<f64> = (0..count).map(|_| self.uniform(lo, hi)).collect();
            s.sort_by(f64::total_cmp);
            if s.windows(2).all(|w| w[1] - w[0] >= gap) {
                return s;
            }
        }
    }

    /// Up to `max_sites` sites 0.4 to 0.8 apart from `lo`, each repeated up
    /// to `max_mult` times.
    fn clustered(&mut self, max_sites: usize, max_mult: usize, lo: f64) -> NodeSequence {
        let count = self.int(1, max_sites);
        let mut site = self.uniform(lo, lo + 0.2);
        let mut nodes = Vec::new();
        for i in 0..count {
            if i > 0 {
                site += self.uniform(0.4, 0.8);
            }
            let m = self.int(1, max_mult);
            nodes.extend(std::iter::repeat_n(site, m));
        }
        NodeSequence::new(nodes).expect("sorted")
    }

    fn power_poly(&mut self, degree: usize) -> PowerPoly {
        PowerPoly::new((0..=degree).map(|_| self.uniform(-1.0, 1.0)).collect())
    }

    fn newton_poly(&mut self, len: usize) -> NewtonPoly {
        let mut centers = self.sites(len - 1, -1.0, 1.0, 0.1);
        centers.shuffle(&mut self.rng);
        let coeffs = (0..len).map(|_| self.uniform(-1.0, 1.0)).collect();
        NewtonPoly::new(centers, coeffs).expect("lengths match")
    }
}

fn dd<F: SmoothFunction + ?Sized>(f: &F, t: &[f64]) -> f64 {
    divided_difference_of(f, t).expect("clusterable nodes")
}

fn annihilation(c: &mut Ctx) -> f64 {
    let mut worst: f64 = 0.0;
    for _ in 0..c.trials {
        let t = c.clustered(4, 3, -1.0);
        let n = t.len();
        let deg = c.int(0, n.saturating_sub(2));
        let p = if n == 1 { PowerPoly::zero() } else { c.power_poly(deg) };
        let data = sample_function(&p, &t).unwrap();
        let scale = data.values().iter().fold(1.0f64, |m, v| m.max(v.abs()));
        worst = worst.max(c.abs_err(divided_difference(&data), 0.0) / scale);
        worst = worst.max(c.abs_err(dd(&Monomial(n - 1), t.nodes()), 1.0));
    }
    worst
}

fn hermite_conditions(c: &mut Ctx) -> f64 {
    let mut worst: f64 = 0.0;
    for _ in 0..c.trials {
        let t = c.clustered(4, 3, -1.0);
        let y: Vec<f64> = (0..t.len()).map(|_| c.uniform(-1.0, 1.0)).collect();
        let r = hermite_interpolant(&HermiteDataset::new(t.clone(), y.clone()).unwrap());
        for (j, (&tj, &mu)) in t.nodes().iter().zip(t.mult_index()).enumerate() {
            worst = worst.max(c.err(derivative_at(&r, tj, mu), y[j]));
        }
    }
    worst
}

fn affine_change(c: &mut Ctx) -> f64 {
    let mut worst: f64 = 0.0;
    for _ in 0..c.trials {
        let t = c.clustered(4, 2, -1.0);
        let sign = if c.rng.random_bool(0.5) { 1.0 } else { -1.0 };
        let a = sign * c.uniform(0.2, 2.0);
        let b = c.uniform(-1.0, 1.0);
        let deg = c.int(0, 7);
        let p = c.power_poly(deg);
        let lhs = dd(&p.compose_affine(a, b), t.nodes());
        let mapped: Vec<f64> = t.nodes().iter().map(|&x| a * x + b).collect();
        worst = worst.max(c.err(lhs, a.powi(t.len() as i32 - 1) * dd(&p, &mapped)));
    }
    worst
}

/// Errors at shrinking perturbations must not grow, and must vanish.
fn continuity(c: &mut Ctx) -> f64 {
    let mut worst: f64 = 0.0;
    for _ in 0..c.trials {
        let n = c.int(2, 5);
        let t = c.sites(n, -1.0, 1.0, 0.1);
        let u: Vec<f64> = (0..n).map(|_| c.uniform(-1.0, 1.0)).collect();
        let deg = c.int(0, 8);
        let p = c.power_poly(deg);
        let base = dd(&p, &t);
        let at = |eps: f64| {
            let moved: Vec<f64> = t.iter().zip(&u).map(|(x, d)| x + eps * d).collect();
            dd(&p, &moved)
        };
        let e: Vec<f64> = [1e-2, 1e-4, 1e-6].iter().map(|&eps| c.abs_err(at(eps), base)).collect();
        if e[1] > e[0] + 1e-12 || e[2] > e[1] + 1e-12 {
            return f64::INFINITY;
        }
        worst = worst.max(c.abs_err(at(1e-10), base));
    }
    worst
}

fn nested_quotient(p: &PowerPoly, t: &[f64]) -> f64 {
    match t {
        [x] => p.eval(*x),
        _ => {
            let n = t.len();
            (nested_quotient(p, &t[1..]) - nested_quotient(p, &t[..n - 1])) / (t[n - 1] - t[0])
        }
    }
}

fn iterated_quotients(c: &mut Ctx) -> f64 {
    let mut worst: f64 = 0.0;
    for _ in 0..c.trials {
        let n = c.int(1, 6);
        let mut t = c.sites(n, -1.0, 1.0, 0.05);
        t.shuffle(&mut c.rng);
        let deg = c.int(0, 8);
        let p = c.power_poly(deg);
        worst = worst.max(c.err(nested_quotient(&p, &t), dd(&p, &t)));
    }
    worst
}

fn horner_hat_coeffs(c: &mut Ctx) -> f64 {
    let mut worst: f64 = 0.0;
    for _ in 0..c.trials {
        let len = c.int(1, 7);
        let p = c.newton_poly(len);
        let z = loop {
            let z = c.uniform(-1.0, 1.0);
            if p.centers().iter().all(|x| (x - z).abs() > 0.05) {
                break z;
            }
        };
        let h = horner_eval(&p, z);
        for j in 0..len {
            let mut nodes = vec![z];
            nodes.extend_from_slice(&p.centers()[..j]);
            worst = worst.max(c.err(h.hatc[j], dd(&p, &nodes)));
        }
    }
    worst
}

fn rebase_round_trip(c: &mut Ctx) -> f64 {
    let mut worst: f64 = 0.0;
    for _ in 0..c.trials {
        let len = c.int(1, 7);
        let p = c.newton_poly(len);
        let other: Vec<f64> = (0..len - 1).map(|_| c.uniform(-1.0, 1.0)).collect();
        let q = change_basis(&p, &other).unwrap();
        let back = change_basis(&q, p.centers()).unwrap();
        for _ in 0..20 {
            let x = c.uniform(-1.5, 1.5);
            worst = worst.max(c.err(q.eval(x), p.eval(x)));
            worst = worst.max(c.err(back.eval(x), p.eval(x)));
        }
    }
    worst
}

fn remainder_composition(c: &mut Ctx) -> f64 {
    let mut worst: f64 = 0.0;
    for _ in 0..c.trials {
        let len = c.int(2, 7);
        let p = c.newton_poly(len);
        let mut t = c.sites(len, -1.0, 1.0, 0.15);
        t.shuffle(&mut c.rng);
        for n in 1..len {
            let q = remainder_poly(&p, &t[..n]).unwrap();
            for j in n + 1..=len {
                worst = worst.max(c.err(dd(&q, &t[n..j]), dd(&p, &t[..j])));
            }
        }
    }
    worst
}

fn opitz_table(c: &mut Ctx) -> f64 {
    let mut worst: f64 = 0.0;
    for _ in 0..c.trials {
        let t = c.clustered(5, 3, -1.0);
        let deg = c.int(0, 10);
        let p = c.power_poly(deg);
        let table = DDTable::build(&sample_function(&p, &t).unwrap());
        let m = matrix_polynomial(&p, &opitz_matrix(&t));
        for i in 0..t.len() {
            for j in 0..t.len() {
                let want = if j <= i { table.get(j, i) } else { 0.0 };
                worst = worst.max(c.err(m[(i, j)], want));
            }
        }
    }
    worst
}

fn opitz_homomorphism(c: &mut Ctx) -> f64 {
    let mut worst: f64 = 0.0;
    for _ in 0..c.trials {
        let t = c.clustered(5, 3, -1.0);
        let (dp, dq) = (c.int(0, 5), c.int(0, 5));
        let (p, q) = (c.power_poly(dp), c.power_poly(dq));
        let a = opitz_matrix(&t);
        let lhs = matrix_polynomial(&p.mul(&q), &a);
        let rhs = matrix_polynomial(&p, &a) * matrix_polynomial(&q, &a);
        for (x, y) in lhs.iter().zip(rhs.iter()) {
            worst = worst.max(c.err(*x, *y));
        }
    }
    worst
}

fn leibniz_product(c: &mut Ctx) -> f64 {
    let mut worst: f64 = 0.0;
    for _ in 0..c.trials {
        let t = c.clustered(4, 3, -1.0);
        let (dp, dq) = (c.int(0, 5), c.int(0, 5));
        let (p, q) = (c.power_poly(dp), c.power_poly(dq));
        let split = leibniz_dd(&sample_function(&p, &t).unwrap(), &sample_function(&q, &t).unwrap()).unwrap();
        worst = worst.max(c.err(split, divided_difference(&sample_function(&p.mul(&q), &t).unwrap())));
    }
    worst
}

fn monomial_formula(c: &mut Ctx) -> f64 {
    let mut worst: f64 = 0.0;
    for _ in 0..c.trials {
        let t = c.clustered(4, 3, -1.5);
        for k in 0..=10 {
            worst = worst.max(c.err(monomial_dd(t.nodes(), k), dd(&Monomial(k), t.nodes())));
        }
    }
    worst
}

fn refinement(c: &mut Ctx) -> f64 {
    let mut worst: f64 = 0.0;
    for _ in 0..c.trials {
        let n = c.int(2, 8);
        let t = c.sites(n, -1.0, 1.0, 0.01);
        let k = c.int(1, n);
        let mut sigma = rand::seq::index::sample(&mut c.rng, n, k).into_vec();
        sigma.sort_unstable();
        let alpha = refine_coeffs(&t, &sigma).unwrap();
        if alpha.iter().any(|&(_, a)| a <= 0.0) {
            return f64::INFINITY;
        }
        worst = worst.max(c.abs_err(alpha.iter().map(|&(_, a)| a).sum(), 1.0));
        let deg = c.int(0, k + 2);
        let p = c.power_poly(deg);
        let sub: Vec<f64> = sigma.iter().map(|&i| t[i]).collect();
        let rhs: f64 = alpha.iter().map(|&(j, a)| a * dd(&p, &t[j..j + k])).sum();
        worst = worst.max(c.err(rhs, dd(&p, &sub)));
    }
    worst
}

fn chakalov_table(c: &mut Ctx) -> f64 {
    let mut worst: f64 = 0.0;
    for _ in 0..c.trials {
        let t = c.clustered(4, 3, -1.0);
        let deg = c.int(0, t.len() + 2);
        let p = c.power_poly(deg);
        worst = worst.max(c.err(chakalov_weights(&t).apply(&p).unwrap(), dd(&p, t.nodes())));
    }
    worst
}

fn lagrange_chakalov(c: &mut Ctx) -> f64 {
    let mut worst: f64 = 0.0;
    for _ in 0..c.trials {
        let n = c.int(1, 7);
        let t = c.sites(n, -1.0, 1.0, 0.05);
        let ch = chakalov_weights(&NodeSequence::new(t.clone()).unwrap());
        for (term, l) in ch.terms.iter().zip(lagrange_weights(&t).unwrap()) {
            worst = worst.max(c.err(term.weight, l));
        }
    }
    worst
}

fn functional_norm_bound(c: &mut Ctx) -> f64 {
    let mut worst: f64 = 0.0;
    for n in 2..=8 {
        let bound = 2f64.powi(n as i32 - 2);
        worst = worst.max(c.abs_err(functional_norm(&chebyshev_extreme_sites(n)).unwrap(), bound) / bound);
    }
    for _ in 0..c.trials {
        let n = c.int(2, 8);
        let t = c.sites(n, -1.0, 1.0, 0.01);
        let bound = 2f64.powi(n as i32 - 2);
        if functional_norm(&t).unwrap() + c.perturb < bound * (1.0 - 1e-12) {
            return f64::INFINITY;
        }
    }
    worst
}

fn cauchy_kernel(c: &mut Ctx) -> f64 {
    let mut worst: f64 = 0.0;
    for _ in 0..c.trials {
        let t = c.clustered(4, 3, -1.0);
        let side = if c.rng.random_bool(0.5) { 1.0 } else { -1.0 };
        let z = side * c.uniform(3.0, 4.0);
        let v = cauchy_kernel_dd(t.nodes(), z).unwrap();
        let w: f64 = t.nodes().iter().map(|&x| z - x).product();
        worst = worst.max(c.abs_err(v * w, 1.0));
    }
    worst
}

fn reciprocal_closed_form(c: &mut Ctx) -> f64 {
    let mut worst = c.err(dd(&Reciprocal, &[1.0, 2.0, 4.0]), 0.125);
    for _ in 0..c.trials {
        let n = c.int(1, 5);
        let t = c.sites(n, 0.5, 3.0, 0.2);
        let closed = reciprocal_dd(&t).unwrap();
        let scale = closed.abs();
        worst = worst.max(c.abs_err(dd(&Reciprocal, &t), closed) / scale);
        let ch = chakalov_weights(&NodeSequence::new(t).unwrap())
            .apply(&Reciprocal)
            .unwrap();
        worst = worst.max(c.abs_err(ch, closed) / scale);
    }
    worst
}

fn five_way(c: &mut Ctx) -> f64 {
    let cfg = QuadratureConfig::default();
    let mut worst: f64 = 0.0;
    for _ in 0..c.trials {
        let t = loop {
            let t = c.clustered(3, 2, 0.0);
            if t.len() <= 5 {
                break t;
            }
        };
        let mut values = vec![
            dd(&Exp, t.nodes()),
            chakalov_weights(&t).apply(&Exp).unwrap(),
            genocchi_dd(&Exp, &t, &cfg).unwrap(),
            contour_dd(&Exp, &t, &cfg).unwrap().value,
        ];
        if t.is_distinct() {
            values.push(determinant_dd(&sample_function(&Exp, &t).unwrap()).unwrap());
        }
        for a in &values[1..] {
            worst = worst.max(c.abs_err(*a, values[0]));
        }
    }
    worst
}

fn bspline_bump(c: &mut Ctx) -> f64 {
    let cfg = QuadratureConfig::default();
    let mut worst: f64 = 0.0;
    for _ in 0..c.trials {
        let knots = loop {
            let k = c.clustered(4, 3, -1.0);
            if k.min() < k.max() {
                break k;
            }
        };
        worst = worst.max(c.abs_err(bspline_integral(&knots, &cfg).unwrap(), 1.0));
        let (a, b) = (knots.min(), knots.max());
        let (lo, hi) = (a - 0.5, b + 0.5);
        for i in 0..MEAN_VALUE_GRID {
            let x = lo + (hi - lo) * i as f64 / (MEAN_VALUE_GRID - 1) as f64;
            let Ok(m) = bspline_eval(x, &knots) else { continue };
            let inside = a <= x && x < b;
            if (inside && m < 0.0) || (!inside && m != 0.0) {
                return f64::INFINITY;
            }
        }
    }
    worst
}

fn peano_kernel(c: &mut Ctx) -> f64 {
    let cfg = QuadratureConfig::default();
    let mut worst: f64 = 0.0;
    for _ in 0..c.trials {
        let knots = loop {
            let k = c.clustered(4, 2, -1.0);
            if k.min() < k.max() {
                break k;
            }
        };
        worst = worst.max(c.abs_err(peano_dd(&Exp, &knots, &cfg).unwrap(), dd(&Exp, knots.nodes())));
    }
    worst
}

fn frobenius(c: &mut Ctx) -> f64 {
    let mut worst: f64 = 0.0;
    for _ in 0..c.trials {
        let t = c.clustered(4, 2, -1.0);
        let off = |x: f64| t.nodes().iter().all(|&n| (n - x).abs() > 1e-2);
        let (x, y) = loop {
            let (x, y) = (c.uniform(-2.0, 2.0), c.uniform(-2.0, 2.0));
            if off(x) && off(y) && (x - y).abs() > 1e-2 {
                break (x, y);
            }
        };
        let (lhs, rhs) = frobenius_partition(t.nodes(), x, y);
        worst = worst.max(c.err(lhs, rhs));
    }
    worst
}

fn floater(c: &mut Ctx) -> f64 {
    let mut worst: f64 = 0.0;
    for _ in 0..c.trials {
        let n = c.int(1, 5);
        let m = c.int(1, n.min(3));
        let s: Vec<f64> = (0..m).map(|_| c.uniform(0.0, 1.0)).collect();
        let t: Vec<f64> = (0..n).map(|_| c.uniform(0.0, 1.0)).collect();
        let e = floater_expansion(&s, &t, &Exp).unwrap();
        let scale = e.direct.abs();
        worst = worst.max(c.abs_err(e.truncation + e.e_floater, e.direct) / scale);
        worst = worst.max(c.abs_err(e.truncation + e.e_leibniz, e.direct) / scale);
    }
    worst
}

fn hopf(c: &mut Ctx) -> f64 {
    let mut worst: f64 = 0.0;
    for _ in 0..c.trials {
        let m = c.int(1, 4);
        let s: Vec<f64> = (0..m).map(|_| c.uniform(0.0, 1.0)).collect();
        let t: Vec<f64> = (0..m).map(|_| c.uniform(0.0, 1.0)).collect();
        worst = worst.max(c.abs_err(hopf_anchor(&s, &t, &Exp).unwrap(), dd(&Exp, &s) - dd(&Exp, &t)));
    }
    worst
}

fn mean_value(c: &mut Ctx) -> f64 {
    for _ in 0..c.trials {
        let t = c.clustered(4, 2, -2.0);
        for mut b in [mean_value_check(&Exp, &t).unwrap(), mean_value_check(&Sin, &t).unwrap()] {
            b.mid += c.perturb;
            if !b.holds() {
                return f64::INFINITY;
            }
        }
        let a = c.uniform(0.2, 2.0);
        let g = FromFn::new(usize::MAX, move |m, x: f64| a.powi(m as i32) * (a * x).exp());
        let mut b = mean_value_check(&g, &t).unwrap();
        b.mid += c.perturb;
        if !b.holds() {
            return f64::INFINITY;
        }
    }
    0.0
}

type Check = (&'static str, f64, fn(&mut Ctx) -> f64);

const CHECKS: [Check; 25] = [
    ("annihilation and normalization", 1e-12, annihilation),
    ("hermite interpolation conditions", 1e-10, hermite_conditions),
    ("affine change of variables", 1e-10, affine_change),
    ("continuity in the nodes", 1e-8, continuity),
    ("iterated difference quotients", 1e-10, iterated_quotients),
    ("horner coefficients as divided differences", 1e-11, horner_hat_coeffs),
    ("basis change round trip", 1e-11, rebase_round_trip),
    ("remainder polynomial composition", 1e-10, remainder_composition),
    ("opitz matrix equals table", 1e-10, opitz_table),
    ("opitz ring homomorphism", 1e-10, opitz_homomorphism),
    ("leibniz rule", 1e-10, leibniz_product),
    ("monomial formula", 1e-10, monomial_formula),
    ("refinement weights", 1e-10, refinement),
    ("chakalov weights equal table", 1e-10, chakalov_table),
    ("lagrange weights equal chakalov weights", 1e-12, lagrange_chakalov),
    ("functional norm bound", 1e-10, functional_norm_bound),
    ("cauchy kernel inverts w", 1e-12, cauchy_kernel),
    ("reciprocal closed form", 1e-12, reciprocal_closed_form),
    ("five-way representation agreement", 1e-8, five_way),
    ("b-spline positivity and unit integral", 1e-10, bspline_bump),
    ("peano kernel representation", 1e-9, peano_kernel),
    ("frobenius partition of unity", 1e-12, frobenius),
    ("floater expansion contract", 1e-9, floater),
    ("hopf anchor formula", 1e-11, hopf),
    ("mean value bracket", 0.0, mean_value),
];

pub fn run(opts: &VerifyOptions) -> Vec<CheckResult> {
    CHECKS
        .iter()
        .enumerate()
        .map(|(i, &(name, tol, check))| {
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
            rng.set_stream(i as u64);
            let mut ctx = Ctx {
                rng,
                trials: opts.trials,
                perturb: opts.perturb,
            };
            CheckResult {
                name,
                worst: check(&mut ctx),
                tol,
            }
        })
        .collect()
}

pub fn report(opts: &VerifyOptions, results: &[CheckResult]) -> String {
    let mut out = String::new();
    for r in results {
        let tag = if r.pass() { "PASS" } else { "FAIL" };
        out += &format!("{tag} {:<44} worst {} tol {:e}\n", r.name, num(r.worst), r.tol);
    }
    let passed = results.iter().filter(|r| r.pass()).count();
    out += &format!(
        "{passed}/{} identities passed (seed {}, trials {})\n",
        results.len(),
        opts.seed,
        opts.trials
    );
    out
}
