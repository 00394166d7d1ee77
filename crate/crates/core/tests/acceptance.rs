//! Acceptance run: one PASS/FAIL line per criterion. A FAIL whose cause is a
//! confirmed, analysed defect of the claim itself is reported as such and
//! does not fail the target; any other FAIL does.

mod common;

use std::time::{Duration, Instant};

use common::{Mask, Oracle};
use leibniz::catalog;
use leibniz::cideal::{self, verify_weak_c, CertificateError, WeakCCertificate};
use leibniz::harness::{run_suite, TheoremReport};
use leibniz::ideals::{self, LeviData};
use leibniz::structure::{self, TurnerForm};
use leibniz::{Field, Gf, LeibnizAlgebra, Method, Rational, Subspace};
use serde_json::{json, Value};

#[derive(PartialEq)]
enum Status {
    Pass,
    /// The claim is false as stated; the analysis was re-confirmed this run.
    KnownFail(String),
    Fail,
}

struct Criterion {
    status: Status,
    details: Vec<String>,
    /// Comparable section: no timings.
    report: Value,
}

impl Criterion {
    fn new(ok: bool, details: Vec<String>, report: Value) -> Self {
        Criterion { status: if ok { Status::Pass } else { Status::Fail }, details, report }
    }
}

fn q(v: i64) -> Rational {
    Rational::from_i64(v)
}

fn frac(a: i64, b: i64) -> Rational {
    q(a) / q(b)
}

// ---------------------------------------------------------------- 1

fn identity_gate() -> Criterion {
    fn entries<F: Field>(bad: &mut Vec<String>) -> usize {
        let c = catalog::catalog::<F>();
        for e in &c {
            if !e.algebra.check_right_leibniz() {
                bad.push(format!("{} over {}", e.name, F::spec()));
            }
        }
        c.len()
    }
    let mut bad = Vec::new();
    let checked = entries::<Rational>(&mut bad)
        + entries::<Gf<2>>(&mut bad)
        + entries::<Gf<3>>(&mut bad)
        + entries::<Gf<5>>(&mut bad)
        + entries::<Gf<7>>(&mut bad);
    let ex = [
        catalog::example::<Rational>().map(|l| l.check_right_leibniz()).unwrap_or(false),
        catalog::example::<Gf<5>>().map(|l| l.check_right_leibniz()).unwrap_or(false),
        catalog::example::<Gf<7>>().map(|l| l.check_right_leibniz()).unwrap_or(false),
    ];
    let gf2_rejected = catalog::example::<Gf<2>>().is_err();
    let ok = bad.is_empty() && ex.iter().all(|&b| b) && gf2_rejected;
    Criterion::new(
        ok,
        vec![
            format!("{checked} catalog entries over Q, GF(2), GF(3), GF(5), GF(7); failures {bad:?}"),
            format!("example passes over Q, GF(5), GF(7): {ex:?}; rejected over GF(2): {gf2_rejected}"),
        ],
        json!({"entries": checked, "failures": bad, "example": ex, "gf2_rejected": gf2_rejected}),
    )
}

// ---------------------------------------------------------------- 2

#[derive(Default)]
struct OracleTally {
    algebras: usize,
    subalgebras: usize,
    disagreements: Vec<String>,
}

fn oracle_pass<const P: u32>(dim: usize, subideal_and_weak: bool, t: &mut OracleTally) {
    let corpus = catalog::enumerate_corpus::<Gf<P>>(dim).expect("within budget");
    for (l, name) in corpus.algebras.iter().zip(&corpus.names) {
        let mut o = Oracle::of(l);
        t.algebras += 1;
        let lib_subs = ideals::all_subalgebras(l).expect("finite");
        let mut lib_masks: Vec<Mask> = lib_subs.iter().map(|s| o.raw.mask_of(s)).collect();
        lib_masks.sort();
        if lib_masks != o.subalgebras {
            t.disagreements.push(format!("GF({P}) {name}: subalgebra lists differ"));
            continue;
        }
        for &b in &o.subalgebras.clone() {
            t.subalgebras += 1;
            let lb: Subspace<Gf<P>> = o.raw.to_lib(b);
            let core = o.raw.mask_of(&ideals::core(l, &lb));
            if core != o.core(b) {
                t.disagreements.push(format!("GF({P}) {name}: core of {}", lb.render()));
            }
            if !subideal_and_weak {
                continue;
            }
            let chain = ideals::is_subideal(l, &lb).expect("subalgebra");
            if chain.is_some() != o.is_subideal(b) {
                t.disagreements.push(format!("GF({P}) {name}: subideal {}", lb.render()));
            }
            if let Some(ch) = &chain {
                if ch.validate(l).is_err() {
                    t.disagreements.push(format!("GF({P}) {name}: invalid chain for {}", lb.render()));
                }
            }
            let reduced = cideal::is_weak_c_ideal(l, &lb).expect("subalgebra");
            let brute = o.is_weak_c_ideal(b);
            if reduced.decided() != Some(brute) {
                t.disagreements.push(format!("GF({P}) {name}: weak c-ideal {}", lb.render()));
            }
            if let Some(cert) = &reduced.witness {
                if verify_weak_c(l, cert).is_err() {
                    t.disagreements.push(format!("GF({P}) {name}: bad certificate for {}", lb.render()));
                }
            }
            let unreduced = cideal::weak_c_unreduced(l, &lb).expect("subalgebra");
            if unreduced.is_some() != brute {
                t.disagreements.push(format!("GF({P}) {name}: unreduced weak c-ideal {}", lb.render()));
            }
        }
    }
}

fn oracle_equivalences() -> Criterion {
    let mut ab = OracleTally::default();
    for dim in 0..=3 {
        oracle_pass::<2>(dim, true, &mut ab);
    }
    let mut c = OracleTally::default();
    for dim in 0..=3 {
        oracle_pass::<3>(dim, false, &mut c);
    }
    let ok = ab.disagreements.is_empty() && c.disagreements.is_empty();
    Criterion::new(
        ok,
        vec![
            format!(
                "(a) subideal and (b) weak c-ideal vs brute force, GF(2) dims 0-3: {} algebras, {} subalgebras, {} disagreements",
                ab.algebras,
                ab.subalgebras,
                ab.disagreements.len()
            ),
            format!(
                "(c) core vs largest enumerated ideal, GF(2) above and GF(3) dims 0-3: {} more algebras, {} subalgebras, {} disagreements",
                c.algebras,
                c.subalgebras,
                c.disagreements.len()
            ),
        ],
        json!({
            "gf2": {"algebras": ab.algebras, "subalgebras": ab.subalgebras, "disagreements": ab.disagreements},
            "gf3": {"algebras": c.algebras, "subalgebras": c.subalgebras, "disagreements": c.disagreements},
        }),
    )
}

// ---------------------------------------------------------------- 3-5, 7

fn corpora_reports(ids: &[&str]) -> Vec<TheoremReport> {
    fn on<F: Field>(ids: &[&str], dim: usize, out: &mut Vec<TheoremReport>) {
        let c = catalog::enumerate_corpus::<F>(dim).expect("within budget");
        for id in ids {
            out.push(run_suite(id, &c).expect("registered suite"));
        }
    }
    let mut out = Vec::new();
    on::<Gf<2>>(ids, 2, &mut out);
    on::<Gf<3>>(ids, 2, &mut out);
    on::<Gf<5>>(ids, 2, &mut out);
    on::<Gf<2>>(ids, 3, &mut out);
    out
}

fn summarize(reports: &[TheoremReport]) -> Vec<String> {
    reports
        .iter()
        .map(|r| {
            format!(
                "{} on {}: held {}/{}, undecided {}, violations {}{}",
                r.suite,
                r.corpus,
                r.hypothesis_held,
                r.instances,
                r.undecided,
                r.violations.len(),
                if r.notes.is_empty() { String::new() } else { format!(" ({})", r.notes.join("; ")) }
            )
        })
        .collect()
}

fn reports_json(reports: &[TheoremReport]) -> Value {
    Value::Array(reports.iter().map(|r| r.to_json(false)).collect())
}

fn suite_criterion(ids: &[&str]) -> Criterion {
    let reports = corpora_reports(ids);
    let ok = reports.iter().all(|r| r.passed() && r.violations.is_empty());
    Criterion::new(ok, summarize(&reports), reports_json(&reports))
}

// ---------------------------------------------------------------- 6

fn supersolvable_oracle<const P: u32>(dim: usize, held: &mut usize, bad: &mut Vec<String>) {
    let corpus = catalog::enumerate_corpus::<Gf<P>>(dim).expect("within budget");
    for (l, name) in corpus.algebras.iter().zip(&corpus.names) {
        let mut o = Oracle::of(l);
        let flag = o.is_supersolvable();
        if structure::is_supersolvable(l).decided() != Some(flag) {
            bad.push(format!("GF({P}) {name}: supersolvability disagrees with flag search"));
        }
        if l.is_symmetric() != o.is_symmetric() {
            bad.push(format!("GF({P}) {name}: symmetry disagrees"));
        }
        if o.supersolvability_hypothesis() {
            *held += 1;
            if !flag {
                bad.push(format!("GF({P}) {name}: hypothesis holds, no complete flag"));
            }
        }
    }
}

fn symmetric_supersolvable() -> Criterion {
    let mut reports = Vec::new();
    for dim in 0..=3 {
        let c = catalog::enumerate_corpus::<Gf<2>>(dim).expect("within budget");
        reports.push(run_suite("symmetric-supersolvable", &c).expect("registered"));
    }
    for dim in 0..=2 {
        let c = catalog::enumerate_corpus::<Gf<3>>(dim).expect("within budget");
        reports.push(run_suite("symmetric-supersolvable", &c).expect("registered"));
    }
    let mut held = 0;
    let mut bad = Vec::new();
    for dim in 0..=3 {
        supersolvable_oracle::<2>(dim, &mut held, &mut bad);
    }
    for dim in 0..=2 {
        supersolvable_oracle::<3>(dim, &mut held, &mut bad);
    }
    let lib_held: usize = reports.iter().map(|r| r.hypothesis_held).sum();
    let ok = reports.iter().all(|r| r.violations.is_empty() && r.undecided == 0) && bad.is_empty() && lib_held == held;
    let mut details = summarize(&reports);
    details.push(format!(
        "brute force: {held} members satisfy the hypothesis (library {lib_held}), all supersolvable: {}; disagreements {bad:?}",
        bad.is_empty()
    ));
    Criterion::new(ok, details, json!({"reports": reports_json(&reports), "oracle_held": held, "oracle": bad}))
}

// ---------------------------------------------------------------- 7

/// The stated criterion `L^2 ∩ J ⊆ Asoc(L)` is necessary but not sufficient.
/// Confirms on every corpus member that the line loop matches brute force,
/// the exact route (every element of `L^2 ∩ J` spans an ideal) matches the
/// line loop, and the stated route errs only by accepting.
fn criterion_analysis<const P: u32>(dim: usize, false_accepts: &mut Vec<String>, other: &mut Vec<String>) {
    let corpus = catalog::enumerate_corpus::<Gf<P>>(dim).expect("within budget");
    for (l, name) in corpus.algebras.iter().zip(&corpus.names) {
        let o = Oracle::of(l);
        let truth = o.all_lines_c();
        let r = cideal::all_one_dim_c_ideals(l);
        if r.by_lines != Some(truth) || r.by_exact != Some(truth) {
            other.push(format!("GF({P}) {name}: line loop or exact route disagrees with brute force"));
        }
        match (r.by_criterion, truth) {
            (Some(c), t) if c == t => {}
            (Some(true), false) => false_accepts.push(format!("GF({P}) dim {dim} {name}")),
            _ => other.push(format!("GF({P}) {name}: stated criterion rejects an algebra whose lines are c-ideals")),
        }
    }
}

fn section_five() -> Criterion {
    let ids = ["line-c-ideal-trichotomy", "line-criterion", "cyclic-lines", "one-dim-c-profile", "symmetric-classification"];
    let reports = corpora_reports(&ids);
    let mut false_accepts = Vec::new();
    let mut other = Vec::new();
    criterion_analysis::<2>(2, &mut false_accepts, &mut other);
    criterion_analysis::<3>(2, &mut false_accepts, &mut other);
    criterion_analysis::<5>(2, &mut false_accepts, &mut other);
    criterion_analysis::<2>(3, &mut false_accepts, &mut other);

    // smallest witness: R_x maps x -> x2 -> x3 -> x3 and the line <x2>
    let cyc = catalog::cyclic_idempotent::<Rational>(3);
    let w = cideal::all_one_dim_c_ideals(&cyc);
    let x2 = cyc.span_labels(&[&cyc.labels()[1]]);
    let witness_ok = w.by_criterion == Some(true)
        && w.by_exact == Some(false)
        && cideal::is_c_ideal(&cyc, &x2).map(|v| v.is_false()).unwrap_or(false);

    let criterion_violations: usize =
        reports.iter().filter(|r| r.suite == "line-criterion").map(|r| r.violations.len()).sum();
    let others_clean = reports.iter().filter(|r| r.suite != "line-criterion").all(|r| r.violations.is_empty());
    let mut details = summarize(&reports);
    details.push(format!(
        "brute-force analysis: stated criterion wrongly accepts {} algebras, never wrongly rejects; line loop and exact route disagreements: {}",
        false_accepts.len(),
        other.len()
    ));
    details.push(format!(
        "over Q, cyclic-idempotent-3 has L^2 ∩ J inside Asoc(L) yet <x2> is not a c-ideal: {witness_ok}"
    ));
    let status = if criterion_violations == 0 && others_clean {
        Status::Pass
    } else if others_clean
        && other.is_empty()
        && witness_ok
        && criterion_violations == false_accepts.len()
        && !false_accepts.is_empty()
    {
        Status::KnownFail(format!(
            "the two routes disagree on {criterion_violations} algebras: L^2 ∩ J ⊆ Asoc(L) is necessary, not sufficient; the exact route agrees everywhere"
        ))
    } else {
        Status::Fail
    };
    Criterion {
        status,
        details,
        report: json!({"reports": reports_json(&reports), "false_accepts": false_accepts, "other": other, "witness": witness_ok}),
    }
}

// ---------------------------------------------------------------- 8

fn turner_finite<F: Field>() -> (Value, bool) {
    let l = catalog::example::<F>().expect("odd characteristic");
    let r = cideal::all_one_dim_c_ideals(&l);
    let exhaustive = structure::turner_form_exhaustive(&l).expect("finite");
    let structural = structure::turner_form(&l);
    let ok = r.by_lines == Some(true)
        && r.by_criterion == Some(true)
        && r.by_exact == Some(true)
        && matches!(exhaustive, TurnerForm::Neither)
        && matches!(structural, TurnerForm::Neither);
    let v = json!({
        "field": F::spec().to_string(),
        "lines": r.by_lines,
        "criterion": r.by_criterion,
        "exact": r.by_exact,
        "turner_exhaustive": exhaustive.name(),
        "turner_structural": structural.name(),
    });
    (v, ok)
}

fn rational_certificates() -> (Value, bool, bool) {
    let l = catalog::example::<Rational>().expect("characteristic 0");
    let ab = l.span_labels(&["a", "b"]);
    let fb = l.span_labels(&["b"]);
    let fx = l.span_labels(&["x"]);
    let ideal_ok = l.is_ideal(&fb) && cideal::certify(&l, &fb, &l.full()).is_some();
    let x_ok = cideal::certify(&l, &fx, &ab).is_some();
    let chain = ideals::is_subideal(&l, &ab).expect("subalgebra").expect("ideal");
    let mut corrected = Vec::new();
    let mut literal = Vec::new();
    for alpha in [q(1), q(-2), frac(1, 2), q(3)] {
        for beta in [q(1), q(-1), frac(2, 5), q(7)] {
            let v = |gamma: Rational| Subspace::line(vec![alpha.clone(), beta.clone(), gamma]);
            let good = v(-(alpha.clone() * alpha.clone()) / beta.clone());
            corrected.push(cideal::certify(&l, &good, &ab).is_some());
            let printed = v(alpha.clone() * alpha.clone() / beta.clone());
            let cert = WeakCCertificate {
                core: ideals::core(&l, &printed),
                b: printed,
                complement: ab.clone(),
                chain: chain.clone(),
            };
            literal.push(verify_weak_c(&l, &cert).err());
        }
    }
    let corrected_ok = corrected.iter().all(|&b| b);
    let literal_rejected = literal.iter().all(|e| *e == Some(CertificateError::NotSubalgebra));
    let v = json!({
        "b_ideal": ideal_ok,
        "x_complemented": x_ok,
        "corrected_family": corrected,
        "printed_family": literal.iter().map(|e| e.as_ref().map(|e| e.to_string())).collect::<Vec<_>>(),
    });
    (v, ideal_ok && x_ok && corrected_ok, literal_rejected)
}

fn turner_refutation() -> Criterion {
    let (v5, ok5) = turner_finite::<Gf<5>>();
    let (v7, ok7) = turner_finite::<Gf<7>>();
    let l5 = catalog::example::<Gf<5>>().expect("odd");
    let brute5 = Oracle::of(&l5).all_lines_c();
    let (vq, q_ok, printed_rejected) = rational_certificates();
    let details = vec![
        format!("GF(5): {v5}, brute force every line a c-ideal: {brute5}"),
        format!("GF(7): {v7}"),
        format!("Q certificates: {vq}"),
    ];
    let refutation = ok5 && ok7 && brute5 && q_ok;
    let status = if refutation && !printed_rejected {
        Status::Pass
    } else if refutation {
        Status::KnownFail(
            "the family with γ = α²/β is not a subalgebra ([v,v] = 2α²b); with γ = -α²/β every certificate verifies and the refutation stands"
                .into(),
        )
    } else {
        Status::Fail
    };
    Criterion {
        status,
        details,
        report: json!({"gf5": v5, "gf7": v7, "gf5_brute": brute5, "q": vq}),
    }
}

// ---------------------------------------------------------------- 9

fn rational_spot_checks() -> Criterion {
    let mut checks: Vec<(String, bool)> = Vec::new();
    let l = catalog::example::<Rational>().expect("characteristic 0");
    let (a, b, x) = (l.span_labels(&["a"]), l.span_labels(&["b"]), l.span_labels(&["x"]));
    checks.push(("example: kernel = <b>".into(), l.kernel() == b));
    checks.push(("example: derived length 3".into(), l.derived_length() == Some(3)));
    let flag = structure::is_supersolvable(&l);
    let expected = vec![l.zero_space(), b.clone(), a.sum(&b), l.full()];
    checks.push(("example: flag 0 < Fb < Fa+Fb < L".into(), flag.witness.as_ref() == Some(&expected)));
    let cartan = ideals::cartan_subalgebras(&l, &[]);
    checks.push((
        "example: <x> is Cartan and found by the search".into(),
        ideals::is_cartan(&l, &x) && cartan.found.contains(&x),
    ));

    let s = catalog::sl2::<Rational>();
    checks.push(("sl2: simple".into(), structure::is_simple(&s).is_true()));
    let probes = [
        s.span_labels(&["h"]),
        s.span_labels(&["e"]),
        s.span_labels(&["f"]),
        s.span_labels(&["h", "e"]),
        s.span_labels(&["h", "f"]),
    ];
    let shortcut_q = probes.iter().all(|p| {
        cideal::is_weak_c_ideal(&s, p).is_ok_and(|v| v.is_false() && v.method == Method::SimpleShortcut)
    });
    checks.push(("sl2 over Q: shortcut rejects lines and Borel subalgebras".into(), shortcut_q));
    let borel = s.span_labels(&["h", "e"]);
    checks.push((
        "sl2 over Q: Borel is not a weak c-ideal".into(),
        cideal::is_weak_c_ideal(&s, &borel).is_ok_and(|v| v.is_false()),
    ));
    let s5 = catalog::sl2::<Gf<5>>();
    let o5 = Oracle::of(&s5);
    let mut agree = true;
    for m in &o5.subalgebras {
        let bsub: Subspace<Gf<5>> = o5.raw.to_lib(*m);
        if bsub.is_zero() || bsub.is_full() {
            continue;
        }
        let shortcut = cideal::is_weak_c_ideal(&s5, &bsub).expect("subalgebra");
        let exhaustive = cideal::weak_c_exhaustive(&s5, &bsub).expect("subalgebra");
        agree &= shortcut.method == Method::SimpleShortcut && shortcut.decided() == exhaustive.decided();
        agree &= exhaustive.is_false();
    }
    checks.push(("sl2 over GF(5): shortcut ≡ exhaustive on every proper subalgebra".into(), agree));
    checks.push((
        "sl2 over GF(5): weakly c-simple by exhaustive search".into(),
        structure::is_weakly_c_simple(&s5).is_ok_and(|v| v.is_true()),
    ));

    let sa = catalog::direct_sum(&catalog::sl2::<Rational>(), &LeibnizAlgebra::abelian(1));
    let levi = LeviData { levi: sa.span_labels(&["e", "f", "h"]), radical: sa.span_labels(&["e0"]) };
    let composed = ideals::cartan_compose(&sa, &levi, &sa.span_labels(&["h"]), &sa.span_labels(&["e0"]));
    checks.push(("sl2 ⊕ F: H + B is Cartan".into(), composed == Ok(sa.span_labels(&["h", "e0"]))));
    let sn = catalog::sl2_natural::<Rational>();
    let levi = LeviData { levi: sn.span_labels(&["e", "f", "h"]), radical: sn.span_labels(&["v1", "v2"]) };
    let composed = ideals::cartan_compose(&sn, &levi, &sn.span_labels(&["h"]), &sn.zero_space());
    checks.push(("sl2 ⋉ natural module: H + 0 is Cartan".into(), composed == Ok(sn.span_labels(&["h"]))));

    let ok = checks.iter().all(|(_, b)| *b);
    let details = checks.iter().map(|(s, b)| format!("{s}: {b}")).collect();
    let report = Value::Array(checks.iter().map(|(s, b)| json!({"check": s, "ok": b})).collect());
    Criterion::new(ok, details, report)
}

// ---------------------------------------------------------------- driver

type Run = fn() -> Criterion;

fn run_2_to_9() -> Vec<(u8, &'static str, Option<Duration>, Run)> {
    vec![
        (2, "oracle equivalences", Some(Duration::from_secs(15 * 60)), oracle_equivalences as Run),
        (3, "basic weak c-ideal properties", None, || {
            suite_criterion(&["c-ideal-implies-weak-c", "weakly-c-simple-iff-simple", "weak-c-hereditary", "weak-c-quotient"])
        }),
        (4, "Frattini and core-complement", None, || suite_criterion(&["frattini-weak-c", "complement-mod-core"])),
        (5, "solvable ideals and derived powers", None, || {
            suite_criterion(&["solvable-ideal-maximal-weak-c", "derived-power-in-subideal"])
        }),
        (6, "symmetric supersolvability", Some(Duration::from_secs(30 * 60)), symmetric_supersolvable),
        (7, "one-dimensional c-ideals", None, section_five),
        (8, "refutation of the claimed classification", Some(Duration::from_secs(10)), turner_refutation),
        (9, "rational spot checks", Some(Duration::from_secs(5)), rational_spot_checks),
    ]
}

fn main() {
    let mut unexpected = 0;
    let mut known = 0;
    let mut report = |id: u8, title: &str, c: &Criterion, elapsed: Duration, limit: Option<Duration>| {
        let late = limit.is_some_and(|lim| elapsed > lim);
        let (word, extra) = match (&c.status, late) {
            (Status::Pass, false) => ("PASS", String::new()),
            (Status::KnownFail(why), false) => {
                known += 1;
                ("FAIL", format!(" [analysed: {why}]"))
            }
            (_, true) => {
                unexpected += 1;
                ("FAIL", " [over time limit]".to_string())
            }
            (Status::Fail, _) => {
                unexpected += 1;
                ("FAIL", String::new())
            }
        };
        println!("criterion {id:>2}: {word}  {title} ({:.2} s){extra}", elapsed.as_secs_f64());
        for d in &c.details {
            println!("    {d}");
        }
    };

    let t = Instant::now();
    let c1 = identity_gate();
    report(1, "identity gate", &c1, t.elapsed(), Some(Duration::from_secs(1)));

    let mut first = Vec::new();
    for (id, title, limit, f) in run_2_to_9() {
        let t = Instant::now();
        let c = f();
        report(id, title, &c, t.elapsed(), limit);
        first.push(c.report);
    }

    let t = Instant::now();
    let second: Vec<Value> = run_2_to_9().into_iter().map(|(_, _, _, f)| f().report).collect();
    let a: Vec<String> = first.iter().map(|v| serde_json::to_string(v).expect("json")).collect();
    let b: Vec<String> = second.iter().map(|v| serde_json::to_string(v).expect("json")).collect();
    let same = a == b;
    let c10 = Criterion::new(
        same,
        vec![format!(
            "criteria 2-9 rerun: {} of {} comparable sections bytewise identical ({} bytes)",
            a.iter().zip(&b).filter(|(x, y)| x == y).count(),
            a.len(),
            a.iter().map(String::len).sum::<usize>()
        )],
        Value::Null,
    );
    report(10, "determinism", &c10, t.elapsed(), None);

    println!("acceptance: {} PASS, {known} analysed FAIL, {unexpected} unexpected FAIL", 10 - known - unexpected);
    if unexpected > 0 {
        std::process::exit(1);
    }
}
