//! Identity suites shared by the acceptance tests and the `selftest` command.
//!
//! Every case is exact. Operators are compared on full bases of the relevant
//! graded pieces, so a passing suite proves the identity on those pieces.

use num_traits::{One, Zero};

use crate::descendent::{monomials_up_to_weight, DescendentPoly, Virasoro};
use crate::grasscalc::{
    calogero_sutherland, constraint_check, content_sum, geometricity_check, gr_class_schur,
    gr_class_wallcross, gr_integral, gr_virasoro, gr_virasoro_dual, hecke, hecke_sym,
    integrals_by_recursion, p_op, singular_check_with, wallcross_steps, FockOperator, FockParams,
    GrElem, JackVariant,
};
use crate::latticeva::{self, Lattice, VAElem};
use crate::partition::Partition;
use crate::quiver::{self, euler_form, euler_matrix, framed_euler, DgQuiver, DimVector, FramingVector};
use crate::rational::{factorial_q, int, rat, sign, Rational};
use crate::symfunc::{complete, elementary, hall, involution, schur, SymFunc};

const MAX_REPORTED: usize = 5;

/// Outcome of one family of cases.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub cases: usize,
    pub failed: usize,
    pub failures: Vec<String>,
}

impl Check {
    pub fn new(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            cases: 0,
            failed: 0,
            failures: Vec::new(),
        }
    }

    pub fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < MAX_REPORTED {
                self.failures.push(detail());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0 && self.cases > 0
    }
}

/// One acceptance criterion: all of its checks must pass. Notes carry
/// diagnostics that do not affect the verdict.
#[derive(Clone, Debug)]
pub struct Criterion {
    pub id: u8,
    pub title: &'static str,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
}

impl Criterion {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn cases(&self) -> usize {
        self.checks.iter().map(|c| c.cases).sum()
    }

    pub fn summary_line(&self) -> String {
        let failed: usize = self.checks.iter().map(|c| c.failed).sum();
        format!(
            "[{}] AC-{:02} {} ({} cases, {} failed)",
            if self.passed() { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.cases(),
            failed
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Fast,
    Full,
}

impl Suite {
    fn pick<T>(self, fast: T, full: T) -> T {
        match self {
            Suite::Fast => fast,
            Suite::Full => full,
        }
    }
}

pub fn all_criteria(suite: Suite) -> Vec<Criterion> {
    vec![
        schur_example(),
        gr24_integrals(),
        grassmannian_constraints(suite),
        wallcrossing(suite),
        hecke_identities(suite),
        virasoro_brackets(suite),
        recursion_uniqueness(suite),
        calogero_sutherland_eigen(suite),
        jack_singular_vectors(suite),
        geometricity(suite),
        euler_golden(),
    ]
}

fn sf(terms: &[(i64, i64, &[usize])]) -> SymFunc {
    SymFunc::from_terms(
        terms
            .iter()
            .map(|&(n, d, l)| (Partition::new(l.to_vec()), rat(n, d))),
    )
}

fn p_basis(max_deg: usize) -> Vec<SymFunc> {
    Partition::up_to(max_deg).iter().map(SymFunc::p_lambda).collect()
}

pub fn schur_example() -> Criterion {
    let mut c = Check::new("s_(2,2) in the power-sum basis");
    let want = sf(&[(1, 12, &[1, 1, 1, 1]), (1, 4, &[2, 2]), (-1, 3, &[3, 1])]);
    let got = schur(&Partition::new(vec![2, 2]));
    c.record(got == want, || format!("got {got}"));
    Criterion {
        id: 1,
        title: "Schur (2,2) expansion",
        checks: vec![c],
        notes: vec![],
    }
}

pub fn gr24_integrals() -> Criterion {
    let mut c = Check::new("integrals over Gr(2,4)");
    let cases: [(&[usize], i64); 5] = [
        (&[1, 1, 1, 1], 2),
        (&[2, 2], 2),
        (&[3, 1], -1),
        (&[4], 0),
        (&[2, 1, 1], 0),
    ];
    for (l, v) in cases {
        let lam = Partition::new(l.to_vec());
        let got = gr_integral(2, 4, &SymFunc::p_lambda(&lam));
        c.record(matches!(&got, Ok(x) if *x == int(v)), || {
            format!("p{lam}: got {got:?}, want {v}")
        });
    }
    Criterion {
        id: 2,
        title: "Gr(2,4) descendent integrals",
        checks: vec![c],
        notes: vec![],
    }
}

pub fn grassmannian_constraints(suite: Suite) -> Criterion {
    let (n_max, big_max) = suite.pick((4, 4), (6, 7));
    let mut c = Check::new(format!("constraints on s_(N-k)^k, 1<=n<={n_max}, N<={big_max}"));
    for big_n in 0..=big_max {
        for k in 0..=big_n {
            let report = constraint_check(k, big_n, n_max).expect("valid range");
            for (n, r) in report.residuals.iter().skip(1) {
                c.record(r.is_zero(), || format!("k={k} N={big_n} n={n}: residual {r}"));
            }
        }
    }
    Criterion {
        id: 3,
        title: "Grassmannian Virasoro constraints",
        checks: vec![c],
        notes: vec![],
    }
}

pub fn wallcrossing(suite: Suite) -> Criterion {
    let big_max = suite.pick(4, 6);
    let mut c = Check::new(format!("wall-crossing class = Schur class, N<={big_max}"));
    let mut step_agree = 0;
    let mut step_total = 0;
    for big_n in 0..=big_max {
        for k in 0..=big_n {
            let w = gr_class_wallcross(k, big_n);
            let s = gr_class_schur(k, big_n).expect("valid range");
            c.record(matches!(&w, Ok(x) if *x == s), || format!("k={k} N={big_n}: got {w:?}, want {s}"));
            for step in wallcross_steps(k, big_n).expect("valid range") {
                step_total += 1;
                if step.observed_sign == Some(step.stated_sign) {
                    step_agree += 1;
                }
            }
        }
    }
    let notes = vec![format!(
        "single-bracket steps matching +(-1)^(N-j) H^sym: {step_agree}/{step_total}; \
         the observed step sign is (-1)^(N-j-1)"
    )];
    Criterion {
        id: 4,
        title: "Wall-crossing equals Schur class",
        checks: vec![c],
        notes,
    }
}

fn commutator(
    a: impl Fn(&SymFunc) -> SymFunc,
    b: impl Fn(&SymFunc) -> SymFunc,
    f: &SymFunc,
) -> SymFunc {
    &a(&b(f)) - &b(&a(f))
}

pub fn hecke_identities(suite: Suite) -> Criterion {
    let (r, deg) = suite.pick((2i64, 3usize), (4, 5));
    let basis = p_basis(deg);
    let sigma = |f: &SymFunc| involution(f);

    let mut c1 = Check::new("[H_n, p_m] = -H_{n+m}");
    for n in -r..=r {
        for m in (-r..=r).filter(|&m| m != 0) {
            for f in &basis {
                let lhs = commutator(|g| hecke(n, g), |g| p_op(m, g), f);
                let rhs = -hecke(n + m, f);
                c1.record(lhs == rhs, || format!("n={n} m={m} f={f}"));
            }
        }
    }

    let mut c2 = Check::new("H_n adjoint = (-1)^n σ H_{-n} σ");
    for n in -r..=r {
        for f in &basis {
            let df = f.max_degree().unwrap_or(0) as i64;
            if df + n < 0 || df + n > deg as i64 {
                continue;
            }
            for g in Partition::all((df + n) as usize).iter().map(SymFunc::p_lambda) {
                let lhs = hall(&hecke(n, f), &g);
                let rhs = hall(f, &sigma(&hecke(-n, &sigma(&g))).scale(&sign(n)));
                c2.record(lhs == rhs, || format!("n={n} f={f} g={g}"));
            }
        }
    }

    let mut c3 = Check::new("H_n H_m = -H_{m-1} H_{n+1}");
    for n in -r..=r {
        for m in -r..=r {
            for f in &basis {
                let lhs = hecke(n, &hecke(m, f));
                let rhs = -hecke(m - 1, &hecke(n + 1, f));
                c3.record(lhs == rhs, || format!("n={n} m={m} f={f}"));
            }
        }
    }

    let mut c4 = Check::new("s_λ = H_λ1 ... H_λl 1");
    for lam in Partition::up_to(deg + 1) {
        let got = lam
            .parts()
            .iter()
            .rev()
            .fold(SymFunc::one(), |acc, &p| hecke(p as i64, &acc));
        c4.record(got == schur(&lam), || format!("λ={lam}"));
    }

    let mut c5 = Check::new("H^sym chain = (-1)^C(k,2) k! s_(m^k)");
    for m in 1..=6i64 {
        for k in 1..=(6 - m) {
            let mut acc = SymFunc::one();
            let mut idx = m + k - 1;
            while idx > m - k {
                acc = hecke_sym(idx, &acc);
                idx -= 2;
            }
            let want = schur(&Partition::rectangle(m as usize, k as usize))
                .scale(&(sign(k * (k - 1) / 2) * factorial_q(k as u32)));
            c5.record(acc == want, || format!("m={m} k={k}: got {acc}"));
        }
    }

    let n_max = suite.pick(2, 3);
    let m_max = suite.pick(2, 3);
    let lv = |n: i64, f: &SymFunc| gr_virasoro(n, &GrElem::new(0, 0, f.clone())).f;
    let ld = |n: i64, f: &SymFunc| gr_virasoro_dual(n, 0, 0, f);

    let mut c6 = Check::new("[L_n dual, H_m] commutator");
    let mut c7 = Check::new("[L_n, H_m] commutator");
    let mut c8 = Check::new("[L_n, H^sym_m] commutator");
    for n in 1..=n_max {
        for m in -m_max..=m_max {
            for f in &basis {
                let lhs = commutator(|g| ld(n, g), |g| hecke(m, g), f);
                let mut rhs = hecke(n + m, f).scale(&int(m + 1));
                for j in 1..n {
                    rhs += p_op(j, &hecke(n + m - j, f));
                }
                rhs -= &p_op(n, &hecke(m, f));
                c6.record(lhs == rhs, || format!("n={n} m={m} f={f}"));

                let lhs = commutator(|g| lv(n, g), |g| hecke(m, g), f);
                let mut rhs = hecke(m - n, f).scale(&int(m - n + 1));
                for j in 1..n {
                    rhs += p_op(-j, &hecke(m - n + j, f));
                }
                rhs -= &p_op(-n, &hecke(m, f));
                c7.record(lhs == rhs, || format!("n={n} m={m} f={f}"));

                let lhs = commutator(|g| lv(n, g), |g| hecke_sym(m, g), f);
                let rhs = &hecke_sym(m - n, f).scale(&int(m + 1))
                    - &p_op(-n, &hecke_sym(m, f)).scale(&int(2));
                c8.record(lhs == rhs, || format!("n={n} m={m} f={f}"));
            }
        }
    }

    let mut c9 = Check::new("L_n s_(m^k) = (m-k) p_{-n} s_(m^k)");
    for m in 1..=4usize {
        for k in 1..=4usize {
            let s = schur(&Partition::rectangle(m, k));
            for n in 1..=n_max {
                let lhs = lv(n, &s);
                let rhs = p_op(-n, &s).scale(&int(m as i64 - k as i64));
                c9.record(lhs == rhs, || format!("m={m} k={k} n={n}"));
            }
        }
    }

    Criterion {
        id: 5,
        title: "Hecke operator identities",
        checks: vec![c1, c2, c3, c4, c5, c6, c7, c8, c9],
        notes: vec![],
    }
}

fn descendent_bracket_check(name: &str, q: &DgQuiver, weight: u32) -> Check {
    let vir = Virasoro::new(q);
    let mut c = Check::new(format!("[L_n, L_m] = (m-n) L_(n+m) on {name}, weight<={weight}"));
    let inputs: Vec<DescendentPoly> = monomials_up_to_weight(q.num_vertices(), weight)
        .into_iter()
        .map(DescendentPoly::monomial)
        .collect();
    for n in -1..=3i64 {
        for m in -1..=3i64 {
            if m <= n {
                continue;
            }
            for f in &inputs {
                let lhs = &vir.l(n, &vir.l(m, f)) - &vir.l(m, &vir.l(n, f));
                let rhs = vir.l(n + m, f).scale(&int(m - n));
                c.record(lhs == rhs, || format!("n={n} m={m} f={}", f.to_text(q)));
            }
        }
    }
    c
}

/// All Fock monomials over `rank` colours of total mode at most `d`.
pub fn fock_monomials(rank: usize, d: u32) -> Vec<Vec<(usize, u32)>> {
    fn go(rank: usize, left: u32, min: (usize, u32), cur: &mut Vec<(usize, u32)>, out: &mut Vec<Vec<(usize, u32)>>) {
        out.push(cur.clone());
        for k in 1..=left {
            for i in 0..rank {
                if (i, k) < min {
                    continue;
                }
                cur.push((i, k));
                go(rank, left - k, (i, k), cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(rank, d, (0, 1), &mut Vec::new(), &mut out);
    out
}

fn lattice_bracket_check(name: &str, lat: &Lattice, alphas: &[Vec<i64>], d: u32) -> Check {
    let mut c = Check::new(format!("[L_n, L_m] = (n-m) L_(n+m) on {name}, Fock degree<={d}"));
    let inputs: Vec<VAElem> = alphas
        .iter()
        .flat_map(|a| {
            fock_monomials(lat.rank(), d)
                .into_iter()
                .map(move |m| VAElem::term(a.clone(), m, Rational::one()))
        })
        .collect();
    for n in -1..=3i64 {
        for m in -1..=3i64 {
            if m <= n {
                continue;
            }
            for x in &inputs {
                let l = |k: i64, y: &VAElem| latticeva::virasoro(lat, k, y);
                let lhs = &l(n, &l(m, x)) - &l(m, &l(n, x));
                let rhs = l(n + m, x).scale(&int(n - m));
                c.record(lhs == rhs, || format!("n={n} m={m} x={x}"));
            }
        }
    }
    c
}

pub fn virasoro_brackets(suite: Suite) -> Criterion {
    let (w, d) = suite.pick((4, 3), (6, 5));
    let alphas = vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![2, 1], vec![3, -1]];
    Criterion {
        id: 6,
        title: "Virasoro bracket suites",
        checks: vec![
            descendent_bracket_check("A1", &quiver::linear(1), w),
            descendent_bracket_check("beilinson_p2", &quiver::beilinson_p2(), w),
            lattice_bracket_check("the Grassmannian lattice", &Lattice::grassmannian(), &alphas, d),
        ],
        notes: vec![],
    }
}

pub fn recursion_uniqueness(suite: Suite) -> Criterion {
    let big_max = suite.pick(4, 6);
    let mut c = Check::new(format!("recursion reproduces every integral, N<={big_max}"));
    let mut u = Check::new("recursion output is dual to a multiple of s_(N-k)^k");
    for big_n in 0..=big_max {
        for k in 0..=big_n {
            let d = (k * (big_n - k)) as usize;
            let norm = gr_integral(k, big_n, &SymFunc::p(1).pow(d as u32)).expect("valid range");
            let table = match integrals_by_recursion(k, big_n, &norm) {
                Ok(t) => t,
                Err(e) => {
                    c.record(false, || format!("k={k} N={big_n}: {e}"));
                    continue;
                }
            };
            for lam in Partition::all(d) {
                let want = gr_integral(k, big_n, &SymFunc::p_lambda(&lam)).expect("valid range");
                let got = table.get(&lam).cloned();
                c.record(got.as_ref() == Some(&want), || {
                    format!("k={k} N={big_n} λ={lam}: got {got:?}, want {want}")
                });
            }
            // ⟨g, p_λ⟩ = t_λ determines g = Σ t_λ p_λ / z_λ.
            let g = SymFunc::from_terms(
                table
                    .iter()
                    .map(|(l, t)| (l.clone(), t / Rational::from_integer(l.z()))),
            );
            let s = schur(&Partition::rectangle((big_n - k) as usize, k as usize));
            let ratio = hall(&g, &s);
            u.record(g == s.scale(&ratio), || format!("k={k} N={big_n}"));
        }
    }
    Criterion {
        id: 7,
        title: "Integrals from the Virasoro recursion",
        checks: vec![c, u],
        notes: vec![],
    }
}

pub fn calogero_sutherland_eigen(suite: Suite) -> Criterion {
    let deg = suite.pick(4, 6);
    let mut eig = Check::new(format!("Δ s_λ ∝ s_λ, |λ|<={deg}"));
    let mut content = Check::new("eigenvalue of s_λ is the content sum");
    for lam in Partition::up_to(deg) {
        let s = schur(&lam);
        let ds = calogero_sutherland(&s);
        let lead = Partition::new(vec![1; lam.size()]);
        let c = ds.coeff(&lead) / s.coeff(&lead);
        eig.record(ds == s.scale(&c), || format!("λ={lam}"));
        content.record(c == int(content_sum(&lam)), || format!("λ={lam}: eigenvalue {c}"));
    }
    let mut eh = Check::new("Δ e_j = -C(j,2) e_j and Δ h_j = C(j,2) h_j");
    for j in 0..=deg as i64 {
        let c = rat(j * (j - 1), 2);
        let e = elementary(j);
        let h = complete(j);
        eh.record(calogero_sutherland(&e) == e.scale(&-c.clone()), || format!("e{j}"));
        eh.record(calogero_sutherland(&h) == h.scale(&c), || format!("h{j}"));
    }
    Criterion {
        id: 8,
        title: "Calogero-Sutherland eigenvectors",
        checks: vec![eig, content, eh],
        notes: vec![],
    }
}

fn singular_params(suite: Suite) -> Vec<FockParams> {
    let betas = suite.pick(vec![int(2), int(3)], vec![int(2), int(3), rat(5, 2)]);
    let mut out = Vec::new();
    for r in 1..=3u32 {
        for s in 1..=3u32 {
            if r * s > suite.pick(4, 6) {
                continue;
            }
            for b in &betas {
                out.push(FockParams::new(r, s, b.clone()).expect("positive parameters"));
            }
        }
    }
    out
}

fn singular_family(name: &str, suite: Suite, op: FockOperator) -> Check {
    let mut c = Check::new(name);
    for p in singular_params(suite) {
        match singular_check_with(&p, JackVariant::HalfBeta2, op) {
            Ok(rep) => {
                let bad: Vec<i64> = rep.residuals.iter().filter(|(_, r)| !r.is_zero()).map(|(n, _)| *n).collect();
                c.record(bad.is_empty(), || {
                    format!("r={} s={} β²={}: L_n nonzero for n in {bad:?}", p.r, p.s, p.beta2)
                });
            }
            Err(e) => c.record(false, || format!("r={} s={} β²={}: {e}", p.r, p.s, p.beta2)),
        }
    }
    c
}

pub fn jack_singular_vectors(suite: Suite) -> Criterion {
    let main = singular_family("σ P^(β²/2)_(r^s) killed by the displayed Fock L_n", suite, FockOperator::Displayed);
    let conj = singular_family("conjugate operators", suite, FockOperator::Conjugate);
    let mut notes = vec![format!(
        "with linear coefficient (α - β0(n+1))β instead: {}/{} cases pass",
        conj.cases - conj.failed,
        conj.cases
    )];
    let p = FockParams::new(2, 1, int(3)).expect("positive parameters");
    let winners: Vec<&str> = [(JackVariant::HalfBeta2, "β²/2"), (JackVariant::TwoOverBeta2, "2/β²")]
        .into_iter()
        .filter(|(v, _)| {
            singular_check_with(&p, *v, FockOperator::Conjugate).map(|r| r.passed()).unwrap_or(false)
        })
        .map(|(_, n)| n)
        .collect();
    notes.push(format!("Jack parameter passing at r=2 s=1 β²=3 (conjugate operators): {winners:?}"));
    Criterion {
        id: 9,
        title: "Jack singular vectors",
        checks: vec![main],
        notes,
    }
}

pub fn geometricity(suite: Suite) -> Criterion {
    let (k_max, big_max, n_max) = suite.pick((2, 4, 2), (3, 6, 3));
    let mut c = Check::new(format!("R_n maps ideal generators into the ideal, k<={k_max} N<={big_max} n<={n_max}"));
    for big_n in 1..=big_max {
        for k in 0..=k_max.min(big_n) {
            for n in 1..=n_max {
                let rep = geometricity_check(k, big_n, n as usize, (big_n + 1) as usize).expect("valid range");
                for case in rep.cases {
                    c.record(case.residual.is_empty(), || {
                        format!("k={k} N={big_n} n={n} {}", case.generator)
                    });
                }
            }
        }
    }
    Criterion {
        id: 10,
        title: "Geometricity of R_n",
        checks: vec![c],
        notes: vec![],
    }
}

pub fn euler_golden() -> Criterion {
    let mut b = Check::new("Beilinson Euler matrix");
    let m = euler_matrix(&quiver::beilinson_p2());
    b.record(m == vec![vec![1, -3, 6], vec![0, 1, -3], vec![0, 0, 1]], || format!("got {m:?}"));
    let mut g = Check::new("χ_Gr((N1,k1),(N2,k2)) = k2(k1-N1)");
    let a1 = quiver::linear(1);
    for n1 in 1..=4i64 {
        let kn = quiver::kronecker(n1 as usize);
        for k1 in 0..=4i64 {
            for k2 in 0..=4i64 {
                for n2 in 1..=2i64 {
                    let want = k2 * (k1 - n1);
                    let fr = framed_euler(
                        &a1,
                        &FramingVector::new(vec![n1]).expect("nonnegative"),
                        &DimVector(vec![k1]),
                        &FramingVector::new(vec![n2]).expect("nonnegative"),
                        &DimVector(vec![k2]),
                    );
                    g.record(fr.as_ref().ok() == Some(&want), || format!("framed A1: {n1} {k1} {n2} {k2}"));
                }
                let kr = euler_form(&kn, &DimVector(vec![1, k1]), &DimVector(vec![0, k2]));
                g.record(kr.as_ref().ok() == Some(&(k2 * (k1 - n1))), || format!("kronecker({n1}): {k1} {k2}"));
            }
        }
    }
    Criterion {
        id: 11,
        title: "Euler form golden values",
        checks: vec![b, g],
        notes: vec![],
    }
}

/// Property checks beyond the numbered criteria.
pub fn extra_invariants(suite: Suite) -> Vec<Check> {
    let deg = suite.pick(4, 6);
    let mut jack1 = Check::new("P^(1)_λ ∝ s_λ");
    for lam in Partition::up_to(deg).into_iter().filter(|l| !l.is_empty()) {
        let j = crate::symfunc::jack(&lam, &int(1));
        let s = schur(&lam);
        let ok = matches!(&j, Ok(j) if {
            let c = hall(j, &s);
            *j == s.scale(&c) && !c.is_zero()
        });
        jack1.record(ok, || format!("λ={lam}"));
    }
    let mut framed = Check::new("framed A1 operators = dual Grassmannian operators");
    let a1 = quiver::linear(1);
    for big_n in 1..=3i64 {
        let vir = Virasoro::framed(&a1, FramingVector::new(vec![big_n]).expect("nonnegative")).expect("one vertex");
        for k in 0..=big_n {
            for lam in Partition::up_to(suite.pick(4, 6)) {
                let g = crate::descendent::from_symfunc(&SymFunc::p_lambda(&lam));
                for n in 0..=4i64 {
                    let lhs = crate::descendent::to_symfunc(&vir.l(n, &g), k);
                    let rhs = gr_virasoro_dual(n, big_n, k, &SymFunc::p_lambda(&lam));
                    framed.record(lhs.as_ref().ok() == Some(&rhs), || format!("N={big_n} k={k} n={n} λ={lam}"));
                }
            }
        }
    }
    let mut adj = Check::new("dual operators are Hall adjoints");
    for n in 0..=3i64 {
        for lam in Partition::up_to(deg.saturating_sub(n as usize)) {
            let f = SymFunc::p_lambda(&lam);
            for mu in Partition::all(lam.size() + n as usize) {
                let g = SymFunc::p_lambda(&mu);
                let lhs = hall(&gr_virasoro_dual(n, 3, 1, &f), &g);
                let rhs = hall(&f, &gr_virasoro(n, &GrElem::new(3, 1, g.clone())).f);
                adj.record(lhs == rhs, || format!("n={n} λ={lam} μ={mu}"));
            }
        }
    }
    vec![jack1, framed, adj]
}
