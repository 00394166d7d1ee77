//! Executable suites: each states an implication about weak c-ideals and is
//! checked on every algebra of a corpus, producing a [`TheoremReport`].
//!
//! A suite runs in assert mode unless it only claims characteristic zero
//! and the corpus is over a finite field; explore-mode violations are
//! findings and never fail a run.

use std::cell::{OnceCell, RefCell};
use std::collections::{BTreeSet, HashMap};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{render_products, AlgebraError, LeibnizAlgebra};
use crate::catalog::{Annotations, Corpus};
use crate::cideal::{self, LineClass};
use crate::field::{Field, FieldSpec};
use crate::ideals::{self, LeviData};
use crate::linalg::{all_vectors, enumerate_subspaces, is_zero_vector, Subspace, Vector};
use crate::structure::{self, TurnerForm};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Applicability {
    AnyField,
    Char0Only,
    /// Only one direction of an equivalence is claimed over every field.
    ForwardOnlyAnyField,
    /// A claim known to fail; its violations are the refutations found.
    Refuted,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Assert,
    Explore,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteInfo {
    pub id: &'static str,
    pub claim: &'static str,
    pub applicability: Applicability,
    /// The decision procedures need a finite field.
    pub finite_only: bool,
    /// Why the claimed direction holds over the fields it is run on.
    pub justification: &'static str,
}

impl SuiteInfo {
    pub fn mode_for(&self, field: FieldSpec) -> Mode {
        let char0_on_finite = self.applicability == Applicability::Char0Only && field.is_finite();
        if char0_on_finite || self.applicability == Applicability::Refuted {
            Mode::Explore
        } else {
            Mode::Assert
        }
    }
}

const fn suite(
    id: &'static str,
    claim: &'static str,
    applicability: Applicability,
    finite_only: bool,
    justification: &'static str,
) -> SuiteInfo {
    SuiteInfo { id, claim, applicability, finite_only, justification }
}

use Applicability::*;

static REGISTRY: &[SuiteInfo] = &[
    suite(
        "c-ideal-implies-weak-c",
        "a c-ideal is a weak c-ideal",
        AnyField,
        false,
        "an ideal complement is a subideal complement",
    ),
    suite(
        "weakly-c-simple-iff-simple",
        "L is weakly c-simple iff L is simple",
        AnyField,
        true,
        "every ideal is a weak c-ideal; a subideal complement of a proper B is L or I",
    ),
    suite(
        "weak-c-hereditary",
        "a weak c-ideal B of L is a weak c-ideal of every subalgebra K ⊇ B",
        AnyField,
        true,
        "intersecting a subideal chain with K gives a subideal chain of K",
    ),
    suite(
        "weak-c-quotient",
        "for an ideal A ⊆ B, B is a weak c-ideal of L iff B/A is one of L/A",
        AnyField,
        true,
        "preimages and images of subideals are subideals",
    ),
    suite(
        "frattini-weak-c",
        "B ⊆ F(C) and B a weak c-ideal imply B is an ideal inside phi(L)",
        AnyField,
        true,
        "C = B + C ∩ K forces C ⊆ K, so B ⊆ B_L",
    ),
    suite(
        "complement-mod-core",
        "B is a weak c-ideal iff B/B_L has a subideal complement in L/B_L",
        AnyField,
        true,
        "subideals correspond under the quotient map",
    ),
    suite(
        "solvable-ideal-maximal-weak-c",
        "for a solvable ideal B, maximal subalgebras not containing B are weak c-ideals",
        ForwardOnlyAnyField,
        true,
        "L = M + B^(k) with B^(k) ∩ M an ideal, by the derived series of B alone",
    ),
    suite(
        "maximal-weak-c-converse",
        "an ideal B is solvable if all maximal subalgebras not containing B are weak c-ideals",
        Char0Only,
        false,
        "uses Levi's theorem; characteristic zero only",
    ),
    suite(
        "maximal-weak-c-solvable",
        "L is solvable if every maximal subalgebra is a weak c-ideal",
        Char0Only,
        false,
        "uses Levi's theorem; characteristic zero only",
    ),
    suite(
        "derived-power-in-subideal",
        "L = U + C with U solvable and C a subideal gives L^(n) ⊆ C for some n",
        AnyField,
        true,
        "derived series and subideal chains only",
    ),
    suite(
        "solvable-maximal-weak-c",
        "L has a solvable maximal subalgebra that is a weak c-ideal iff L is solvable",
        Char0Only,
        false,
        "uses Levi's theorem; characteristic zero only",
    ),
    suite(
        "maximal-nilpotent-weak-c",
        "L is solvable if every maximal nilpotent subalgebra is a weak c-ideal",
        Char0Only,
        false,
        "uses Levi's theorem; characteristic zero only",
    ),
    suite(
        "cartan-composition",
        "H Cartan in a Levi factor S and B Cartan in C_R(H) give a Cartan subalgebra H + B",
        Char0Only,
        false,
        "needs a Levi decomposition; characteristic zero only",
    ),
    suite(
        "cartan-weak-c",
        "L is solvable if every Cartan subalgebra is a weak c-ideal",
        Char0Only,
        false,
        "uses Levi's theorem and Cartan composition; characteristic zero only",
    ),
    suite(
        "maximal-nilpotent-lift",
        "a maximal nilpotent U/A of L/A is C + A for a maximal nilpotent C of L",
        AnyField,
        true,
        "nilpotency and maximality only",
    ),
    suite(
        "symmetric-supersolvable",
        "a solvable symmetric L whose maximal nilpotent subalgebras have only weak c-ideal maximal subalgebras is supersolvable",
        AnyField,
        false,
        "claimed over any field; minimal ideals inside I are lines because [L,I] = [I,L] = 0",
    ),
    suite(
        "nilpotent-maximal-weak-c-char0",
        "the same conclusion without solvability when all maximal nilpotent subalgebras have dimension >= 2",
        Char0Only,
        false,
        "uses Levi's theorem; characteristic zero only",
    ),
    suite(
        "supersolvable-or-sl2",
        "a symmetric L with the same hypothesis is supersolvable or three-dimensional simple",
        Char0Only,
        false,
        "uses Levi's theorem; characteristic zero only",
    ),
    suite(
        "line-c-ideal-trichotomy",
        "for a line Fx: weak c-ideal, c-ideal and (ideal or ideal complement with x ∉ L^2) agree",
        AnyField,
        false,
        "a codimension-one subideal is an ideal",
    ),
    suite(
        "line-criterion",
        "every line is a c-ideal iff L^2 ∩ J ⊆ Asoc(L)",
        AnyField,
        false,
        "one-dimensional algebras are abelian, so hyperplane ideals contain L^2",
    ),
    suite(
        "cyclic-lines",
        "for cyclic L, every line is a c-ideal iff dim L <= 2",
        AnyField,
        false,
        "explicit computation in the basis x, x^2, ...",
    ),
    suite(
        "one-dim-c-profile",
        "if every line is a c-ideal: minimal abelian ideals are lines, Asoc(L) = Z(L) ⊕ D with a common right functional and the ker-functional decomposition",
        AnyField,
        true,
        "elementwise arguments valid over any field",
    ),
    suite(
        "symmetric-classification",
        "a symmetric L has every line a c-ideal iff L^3 = 0 or L = A ⊕ B with A abelian and B almost abelian Lie",
        AnyField,
        false,
        "flexibility and x^3 = 0 hold in symmetric algebras over any field",
    ),
    suite(
        "refute-turner",
        "if every line is a c-ideal then L^3 = 0 or L = A ⊕ B with A abelian and B almost abelian",
        Refuted,
        false,
        "counterexamples exist; each violation is one",
    ),
];

pub fn registry() -> &'static [SuiteInfo] {
    REGISTRY
}

pub fn suite_info(id: &str) -> Option<&'static SuiteInfo> {
    REGISTRY.iter().find(|s| s.id == id)
}

/// How a stated result is exercised.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coverage {
    Suites(&'static [&'static str]),
    OutOfScope(&'static str),
}

/// Every numbered result about weak c-ideals the suites are built from,
/// with the suites exercising it.
pub static STATEMENTS: &[(&str, Coverage)] = &[
    (
        "basic properties of weak c-ideals",
        Coverage::Suites(&[
            "c-ideal-implies-weak-c",
            "weakly-c-simple-iff-simple",
            "weak-c-hereditary",
            "weak-c-quotient",
        ]),
    ),
    ("weak c-ideals inside a Frattini subalgebra", Coverage::Suites(&["frattini-weak-c"])),
    ("subideal complements modulo the core", Coverage::Suites(&["complement-mod-core"])),
    (
        "solvable ideals and maximal subalgebras",
        Coverage::Suites(&["solvable-ideal-maximal-weak-c", "maximal-weak-c-converse"]),
    ),
    ("solvability from maximal subalgebras", Coverage::Suites(&["maximal-weak-c-solvable"])),
    ("derived powers inside subideals", Coverage::Suites(&["derived-power-in-subideal"])),
    ("solvable maximal weak c-ideals", Coverage::Suites(&["solvable-maximal-weak-c"])),
    ("maximal nilpotent weak c-ideals", Coverage::Suites(&["maximal-nilpotent-weak-c"])),
    ("Cartan subalgebras from a Levi decomposition", Coverage::Suites(&["cartan-composition"])),
    ("Cartan weak c-ideals", Coverage::Suites(&["cartan-weak-c"])),
    ("lifting maximal nilpotent subalgebras", Coverage::Suites(&["maximal-nilpotent-lift"])),
    ("symmetric supersolvability", Coverage::Suites(&["symmetric-supersolvable"])),
    (
        "supersolvability without solvability, nilpotent dimension >= 2",
        Coverage::Suites(&["nilpotent-maximal-weak-c-char0"]),
    ),
    ("supersolvable or three-dimensional simple", Coverage::Suites(&["supersolvable-or-sl2"])),
    ("lines that are weak c-ideals", Coverage::Suites(&["line-c-ideal-trichotomy"])),
    ("lines criterion through L^2 ∩ J", Coverage::Suites(&["line-criterion"])),
    ("cyclic algebras", Coverage::Suites(&["cyclic-lines"])),
    ("claimed classification of algebras with c-ideal lines", Coverage::Suites(&["refute-turner"])),
    ("counterexample to the claimed classification", Coverage::Suites(&["refute-turner"])),
    ("structure forced by c-ideal lines", Coverage::Suites(&["one-dim-c-profile"])),
    ("symmetric classification", Coverage::Suites(&["symmetric-classification"])),
    ("definitions", Coverage::OutOfScope("implemented as library operations, not statements")),
];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("suite `{suite}` needs a finite field, corpus is over {field}")]
    Applicability { suite: String, field: FieldSpec },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub algebra: String,
    pub table: String,
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub suite: String,
    pub claim: String,
    pub corpus: String,
    pub mode: Mode,
    pub algebras: usize,
    pub instances: usize,
    pub hypothesis_held: usize,
    pub undecided: usize,
    pub violations: Vec<Violation>,
    pub notes: Vec<String>,
    #[serde(skip)]
    pub wall_time_ms: u128,
}

impl TheoremReport {
    /// Explore-mode reports always pass.
    pub fn passed(&self) -> bool {
        self.mode == Mode::Explore || self.violations.is_empty()
    }

    /// Machine-readable form; the timing is a separate top-level field and
    /// omitted when `timing` is false.
    pub fn to_json(&self, timing: bool) -> serde_json::Value {
        let mut v = serde_json::to_value(self).expect("serializable");
        v["passed"] = self.passed().into();
        if timing {
            v["wall_time_ms"] = (self.wall_time_ms as u64).into();
        }
        v
    }

    pub fn to_text(&self, timing: bool) -> String {
        let mode = match self.mode {
            Mode::Assert => "assert",
            Mode::Explore => "explore",
        };
        let status = if self.passed() { "ok" } else { "VIOLATED" };
        let mut s = format!(
            "{} [{mode}] on {}: {status}\n  algebras {}, instances {}, hypothesis held {}, undecided {}, violations {}\n",
            self.suite,
            self.corpus,
            self.algebras,
            self.instances,
            self.hypothesis_held,
            self.undecided,
            self.violations.len()
        );
        for v in &self.violations {
            s.push_str(&format!("  - {}: {}\n    table: {}\n", v.algebra, v.witness, v.table));
        }
        for n in &self.notes {
            s.push_str(&format!("  note: {n}\n"));
        }
        if timing {
            s.push_str(&format!("  wall time: {} ms\n", self.wall_time_ms));
        }
        s
    }
}

#[derive(Default)]
struct Tally {
    instances: usize,
    hypothesis: usize,
    undecided: usize,
    violations: Vec<String>,
    notes: Vec<String>,
}

impl Tally {
    /// One instance of `hypothesis ⇒ conclusion`; `None` is undecided.
    fn implication(
        &mut self,
        hypothesis: Option<bool>,
        conclusion: impl FnOnce() -> Option<bool>,
        witness: impl FnOnce() -> String,
    ) {
        self.instances += 1;
        match hypothesis {
            Some(false) => {}
            None => self.undecided += 1,
            Some(true) => {
                self.hypothesis += 1;
                match conclusion() {
                    Some(true) => {}
                    Some(false) => self.violations.push(witness()),
                    None => self.undecided += 1,
                }
            }
        }
    }

    /// Like [`Tally::implication`], but a true conclusion settles the
    /// instance without the hypothesis.
    fn conclusion_first(
        &mut self,
        conclusion: Option<bool>,
        hypothesis: impl FnOnce() -> Option<bool>,
        witness: impl FnOnce() -> String,
    ) {
        self.instances += 1;
        if conclusion == Some(true) {
            if hypothesis() == Some(true) {
                self.hypothesis += 1;
            }
            return;
        }
        match hypothesis() {
            Some(false) => {}
            None => self.undecided += 1,
            Some(true) => {
                self.hypothesis += 1;
                match conclusion {
                    Some(_) => self.violations.push(witness()),
                    None => self.undecided += 1,
                }
            }
        }
    }

    /// Two decisions that must agree; `held` counts instances where the
    /// first is true.
    fn agreement(&mut self, a: Option<bool>, b: Option<bool>, witness: impl FnOnce() -> String) {
        self.instances += 1;
        if a == Some(true) {
            self.hypothesis += 1;
        }
        match (a, b) {
            (Some(x), Some(y)) if x != y => self.violations.push(witness()),
            (Some(_), Some(_)) => {}
            _ => self.undecided += 1,
        }
    }
}

/// Per-algebra state with cached verdicts.
struct Ctx<'a, F: Field> {
    l: &'a LeibnizAlgebra<F>,
    ann: &'a Annotations<F>,
    subalgebras: OnceCell<(Vec<Subspace<F>>, bool)>,
    weak: RefCell<HashMap<Subspace<F>, Option<bool>>>,
    lines_c: OnceCell<Option<bool>>,
}

impl<'a, F: Field> Ctx<'a, F> {
    fn new(l: &'a LeibnizAlgebra<F>, ann: &'a Annotations<F>) -> Self {
        Ctx { l, ann, subalgebras: OnceCell::new(), weak: RefCell::new(HashMap::new()), lines_c: OnceCell::new() }
    }

    fn finite(&self) -> bool {
        F::is_finite()
    }

    fn show(&self, s: &Subspace<F>) -> String {
        self.l.render_subspace(s)
    }

    /// All subalgebras (complete) or a probe family over infinite fields.
    fn subalgebras(&self) -> &(Vec<Subspace<F>>, bool) {
        self.subalgebras.get_or_init(|| {
            if self.finite() {
                (ideals::all_subalgebras(self.l).expect("finite"), true)
            } else {
                (probe_subalgebras(self.l, self.ann), false)
            }
        })
    }

    fn ideals(&self) -> Vec<Subspace<F>> {
        self.subalgebras().0.iter().filter(|s| self.l.is_ideal(s)).cloned().collect()
    }

    /// Maximal subalgebras; over infinite fields only the codimension-one
    /// members of the probe family, which are certainly maximal.
    fn maximal(&self) -> (Vec<Subspace<F>>, bool) {
        let (subs, complete) = self.subalgebras();
        if *complete {
            (maximal_among(subs, &self.l.full()), true)
        } else {
            (subs.iter().filter(|s| s.codim() == 1).cloned().collect(), false)
        }
    }

    fn weak_c(&self, b: &Subspace<F>) -> Option<bool> {
        if let Some(v) = self.weak.borrow().get(b) {
            return *v;
        }
        let v = cideal::is_weak_c_ideal(self.l, b).expect("subalgebra").decided();
        self.weak.borrow_mut().insert(b.clone(), v);
        v
    }

    /// `∀ b ∈ family: weak_c(b)`, three-valued; an incomplete family can
    /// only refute.
    fn all_weak_c(&self, family: &[Subspace<F>], complete: bool) -> Option<bool> {
        let mut unknown = !complete;
        for b in family {
            match self.weak_c(b) {
                Some(false) => return Some(false),
                None => unknown = true,
                Some(true) => {}
            }
        }
        (!unknown).then_some(true)
    }

    fn maximal_nilpotent(&self) -> Option<Vec<Subspace<F>>> {
        let (subs, complete) = self.subalgebras();
        if !complete {
            return None;
        }
        let nil: Vec<_> = subs.iter().filter(|s| ideals::is_nilpotent_subalgebra(self.l, s)).cloned().collect();
        Some(nil.iter().filter(|m| !nil.iter().any(|k| m.lt_strict(k))).cloned().collect())
    }

    /// Every maximal subalgebra of every maximal nilpotent subalgebra is a
    /// weak c-ideal of L.
    fn nilpotent_hypothesis(&self) -> Option<bool> {
        let nil = self.maximal_nilpotent()?;
        let (subs, _) = self.subalgebras();
        for n in &nil {
            if self.all_weak_c(&maximal_among(subs, n), true)? {
                continue;
            }
            return Some(false);
        }
        Some(true)
    }

    fn all_lines_c(&self) -> Option<bool> {
        *self.lines_c.get_or_init(|| {
            cideal::all_one_dim_c_ideals(self.l).verdict().decided()
        })
    }
}

/// Members of `family` maximal among those strictly inside `c`.
fn maximal_among<F: Field>(family: &[Subspace<F>], c: &Subspace<F>) -> Vec<Subspace<F>> {
    let inside: Vec<&Subspace<F>> = family.iter().filter(|s| s.lt_strict(c)).collect();
    inside
        .iter()
        .filter(|m| !inside.iter().any(|k| m.lt_strict(k)))
        .map(|m| (*m).clone())
        .collect()
}

/// Deterministic probe subalgebras over infinite fields: coordinate
/// subalgebras, canonical ideals, annotated subalgebras, lines spanned by
/// vectors with entries in {-1, 0, 1}, and sums of pairs of these.
pub fn probe_subalgebras<F: Field>(l: &LeibnizAlgebra<F>, ann: &Annotations<F>) -> Vec<Subspace<F>> {
    let n = l.dim();
    let mut seeds: BTreeSet<Subspace<F>> = BTreeSet::new();
    seeds.insert(l.zero_space());
    seeds.insert(l.full());
    if n <= 10 {
        for mask in 0u32..(1 << n) {
            let s = Subspace::span_unchecked(n, (0..n).filter(|i| mask >> i & 1 == 1).map(|i| l.basis_vector(i)));
            seeds.insert(s);
        }
    }
    seeds.extend(l.derived_series());
    seeds.extend(l.lower_central_series());
    seeds.insert(l.center());
    seeds.insert(l.kernel());
    seeds.extend(ann.cartan.iter().cloned());
    if let Some(LeviData { levi, radical }) = &ann.levi {
        seeds.insert(levi.clone());
        seeds.insert(radical.clone());
    }
    if n <= 6 {
        let coeffs = [F::zero(), F::one(), -F::one()];
        let mut idx = vec![0usize; n];
        loop {
            let v: Vector<F> = idx.iter().map(|&k| coeffs[k].clone()).collect();
            let leading_one = v.iter().find(|c| !c.is_zero()).is_some_and(|c| c.is_one());
            if leading_one {
                seeds.insert(Subspace::line(v));
            }
            let Some(p) = (0..n).rev().find(|&p| idx[p] + 1 < coeffs.len()) else { break };
            idx[p] += 1;
            idx[p + 1..].iter_mut().for_each(|k| *k = 0);
        }
    }
    let base: Vec<Subspace<F>> = seeds.into_iter().filter(|s| l.is_subalgebra(s)).collect();
    let mut out: BTreeSet<Subspace<F>> = base.iter().cloned().collect();
    for (i, a) in base.iter().enumerate() {
        for b in &base[i + 1..] {
            let s = a.sum(b);
            if l.is_subalgebra(&s) {
                out.insert(s);
            }
        }
    }
    out.into_iter().collect()
}

/// Runs one suite over a corpus.
pub fn run_suite<F: Field>(id: &str, corpus: &Corpus<F>) -> Result<TheoremReport, HarnessError> {
    let info = suite_info(id).ok_or_else(|| HarnessError::UnknownSuite(id.to_string()))?;
    if info.finite_only && !F::is_finite() {
        return Err(HarnessError::Applicability { suite: id.to_string(), field: F::spec() });
    }
    let start = Instant::now();
    let tallies: Vec<Tally> = corpus
        .algebras
        .par_iter()
        .zip(corpus.annotations.par_iter())
        .map(|(l, ann)| evaluate(id, &Ctx::new(l, ann)))
        .collect();
    let mut mode = info.mode_for(F::spec());
    let mut report = TheoremReport {
        suite: id.to_string(),
        claim: info.claim.to_string(),
        corpus: corpus.descriptor(),
        mode,
        algebras: corpus.len(),
        instances: 0,
        hypothesis_held: 0,
        undecided: 0,
        violations: Vec::new(),
        notes: Vec::new(),
        wall_time_ms: 0,
    };
    for (k, t) in tallies.into_iter().enumerate() {
        report.instances += t.instances;
        report.hypothesis_held += t.hypothesis;
        report.undecided += t.undecided;
        let l = &corpus.algebras[k];
        for w in t.violations {
            report.violations.push(Violation {
                algebra: corpus.names[k].clone(),
                table: render_products(l.table()),
                witness: w,
            });
        }
        for n in t.notes {
            report.notes.push(format!("{}: {n}", corpus.names[k]));
        }
    }
    if id == "derived-power-in-subideal" && F::is_finite() && !report.violations.is_empty() {
        mode = Mode::Explore;
        report.mode = mode;
        report.notes.push("auto-downgraded to explore: finite-field violation flagged for review".into());
    }
    report.wall_time_ms = start.elapsed().as_millis();
    Ok(report)
}

/// Runs every applicable suite, skipping finite-only suites over infinite
/// fields.
pub fn run_all<F: Field>(corpus: &Corpus<F>) -> Vec<TheoremReport> {
    REGISTRY
        .iter()
        .filter(|s| F::is_finite() || !s.finite_only)
        .map(|s| run_suite(s.id, corpus).expect("applicable"))
        .collect()
}

fn evaluate<F: Field>(id: &str, c: &Ctx<'_, F>) -> Tally {
    let mut t = Tally::default();
    match id {
        "c-ideal-implies-weak-c" => c_implies_weak(c, &mut t),
        "weakly-c-simple-iff-simple" => weakly_c_simple(c, &mut t),
        "weak-c-hereditary" => hereditary(c, &mut t),
        "weak-c-quotient" => quotient_correspondence(c, &mut t),
        "frattini-weak-c" => frattini_weak_c(c, &mut t),
        "complement-mod-core" => complement_mod_core(c, &mut t),
        "solvable-ideal-maximal-weak-c" => solvable_ideal_forward(c, &mut t),
        "maximal-weak-c-converse" => solvable_ideal_converse(c, &mut t),
        "maximal-weak-c-solvable" => maximal_weak_c_solvable(c, &mut t),
        "derived-power-in-subideal" => derived_power(c, &mut t),
        "solvable-maximal-weak-c" => solvable_maximal(c, &mut t),
        "maximal-nilpotent-weak-c" => maximal_nilpotent_weak_c(c, &mut t),
        "cartan-composition" => cartan_composition(c, &mut t),
        "cartan-weak-c" => cartan_weak_c(c, &mut t),
        "maximal-nilpotent-lift" => nilpotent_lift(c, &mut t),
        "symmetric-supersolvable" => symmetric_supersolvable(c, &mut t),
        "nilpotent-maximal-weak-c-char0" => supersolvable_dim_two(c, &mut t),
        "supersolvable-or-sl2" => supersolvable_or_simple(c, &mut t),
        "line-c-ideal-trichotomy" => line_trichotomy(c, &mut t),
        "line-criterion" => line_criterion(c, &mut t),
        "cyclic-lines" => cyclic_lines(c, &mut t),
        "one-dim-c-profile" => profile(c, &mut t),
        "symmetric-classification" => symmetric_classification(c, &mut t),
        "refute-turner" => refute_turner(c, &mut t),
        _ => unreachable!("registry ids are exhaustive"),
    }
    t
}

fn c_implies_weak<F: Field>(c: &Ctx<'_, F>, t: &mut Tally) {
    for b in &c.subalgebras().0 {
        let cv = cideal::is_c_ideal(c.l, b).expect("subalgebra");
        if let Some(k) = &cv.witness {
            if !c.l.is_ideal(k) || !b.sum(k).is_full() || !b.intersect(k).leq(&ideals::core(c.l, b)) {
                t.instances += 1;
                t.violations.push(format!("invalid c-ideal witness {} for {}", c.show(k), c.show(b)));
                continue;
            }
        }
        t.implication(
            cv.decided(),
            || {
                let w = cideal::is_weak_c_ideal(c.l, b).expect("subalgebra");
                match &w.witness {
                    Some(cert) => Some(cideal::verify_weak_c(c.l, cert).is_ok()),
                    None => w.decided(),
                }
            },
            || format!("{} is a c-ideal but not a weak c-ideal", c.show(b)),
        );
    }
}

fn weakly_c_simple<F: Field>(c: &Ctx<'_, F>, t: &mut Tally) {
    let simple = structure::is_simple(c.l).decided();
    let weak = structure::is_weakly_c_simple(c.l).expect("finite").decided();
    t.agreement(simple, weak, || format!("simple {simple:?}, weakly c-simple {weak:?}"));
    if simple == Some(true) && c.l.is_lie() {
        // the shortcut of the decision cascade against the exhaustive search
        for b in &c.subalgebras().0 {
            let fast = cideal::is_weak_c_ideal(c.l, b).expect("subalgebra").decided();
            let slow = cideal::weak_c_exhaustive(c.l, b).expect("finite").decided();
            t.agreement(fast, slow, || format!("shortcut and search disagree on {}", c.show(b)));
        }
    }
}

fn hereditary<F: Field>(c: &Ctx<'_, F>, t: &mut Tally) {
    let subs = &c.subalgebras().0;
    for b in subs {
        let wb = c.weak_c(b);
        for k in subs.iter().filter(|k| b.leq(k)) {
            t.implication(
                wb,
                || {
                    let (sub, _) = c.l.restrict(k).expect("subalgebra");
                    let rel = k.relative(b).expect("B ⊆ K");
                    cideal::weak_c_exhaustive(&sub, &rel).expect("finite").decided()
                },
                || format!("{} is not a weak c-ideal of {}", c.show(b), c.show(k)),
            );
        }
    }
}

fn quotient_correspondence<F: Field>(c: &Ctx<'_, F>, t: &mut Tally) {
    let subs = &c.subalgebras().0;
    for a in c.ideals() {
        let (q, map) = c.l.quotient(&a).expect("ideal");
        for b in subs.iter().filter(|b| a.leq(b)) {
            let upstairs = c.weak_c(b);
            let image = map.project_subspace(b);
            let downstairs = cideal::weak_c_exhaustive(&q, &image).expect("finite").decided();
            t.agreement(upstairs, downstairs, || {
                format!("{} modulo {}: {upstairs:?} upstairs, {downstairs:?} downstairs", c.show(b), c.show(&a))
            });
        }
    }
}

fn frattini_weak_c<F: Field>(c: &Ctx<'_, F>, t: &mut Tally) {
    let phi = ideals::frattini(c.l).expect("finite").ideal;
    let subs = &c.subalgebras().0;
    for cc in subs {
        let f = subs
            .iter()
            .filter(|m| m.lt_strict(cc) && !subs.iter().any(|k| m.lt_strict(k) && k.lt_strict(cc)))
            .fold(cc.clone(), |acc, m| acc.intersect(m));
        for b in subs.iter().filter(|b| b.leq(&f)) {
            t.implication(
                c.weak_c(b),
                || Some(c.l.is_ideal(b) && b.leq(&phi)),
                || format!("{} ⊆ F({}) is a weak c-ideal, phi(L) = {}", c.show(b), c.show(cc), c.show(&phi)),
            );
        }
    }
}

fn complement_mod_core<F: Field>(c: &Ctx<'_, F>, t: &mut Tally) {
    for b in &c.subalgebras().0 {
        let direct = cideal::weak_c_unreduced(c.l, b).expect("finite").is_some();
        let reduced = cideal::has_subideal_complement_mod_core(c.l, b).expect("finite");
        t.agreement(Some(direct), Some(reduced), || {
            format!("{}: definition {direct}, complement modulo core {reduced}", c.show(b))
        });
    }
}

fn solvable_ideal_forward<F: Field>(c: &Ctx<'_, F>, t: &mut Tally) {
    let (max, _) = c.maximal();
    for b in c.ideals().iter().filter(|b| ideals::is_solvable_subalgebra(c.l, b)) {
        for m in max.iter().filter(|m| !b.leq(m)) {
            t.implication(Some(true), || c.weak_c(m), || {
                format!("maximal {} misses solvable ideal {} and is not a weak c-ideal", c.show(m), c.show(b))
            });
        }
    }
}

fn solvable_ideal_converse<F: Field>(c: &Ctx<'_, F>, t: &mut Tally) {
    let (max, complete) = c.maximal();
    for b in c.ideals() {
        let avoiding: Vec<_> = max.iter().filter(|m| !b.leq(m)).cloned().collect();
        t.conclusion_first(
            Some(ideals::is_solvable_subalgebra(c.l, &b)),
            || c.all_weak_c(&avoiding, complete),
            || format!("ideal {} is not solvable", c.show(&b)),
        );
    }
}

fn maximal_weak_c_solvable<F: Field>(c: &Ctx<'_, F>, t: &mut Tally) {
    let (max, complete) = c.maximal();
    t.conclusion_first(
        Some(c.l.is_solvable()),
        || c.all_weak_c(&max, complete),
        || "every maximal subalgebra is a weak c-ideal but L is not solvable".into(),
    );
}

fn derived_power<F: Field>(c: &Ctx<'_, F>, t: &mut Tally) {
    let bottom = c.l.derived_series().pop().expect("nonempty");
    let subs = &c.subalgebras().0;
    let subideals: Vec<_> = subs.iter().filter(|s| ideals::is_subideal(c.l, s).expect("subalgebra").is_some()).collect();
    for u in subs.iter().filter(|u| ideals::is_solvable_subalgebra(c.l, u)) {
        for k in subideals.iter().filter(|k| u.sum(k).is_full()) {
            t.implication(Some(true), || Some(bottom.leq(k)), || {
                format!("U = {}, C = {}, L^(n) stabilizes at {}", c.show(u), c.show(k), c.show(&bottom))
            });
        }
    }
}

fn solvable_maximal<F: Field>(c: &Ctx<'_, F>, t: &mut Tally) {
    if c.l.dim() == 0 {
        return;
    }
    let (max, complete) = c.maximal();
    let mut exists = Some(false);
    for m in max.iter().filter(|m| ideals::is_solvable_subalgebra(c.l, m)) {
        match c.weak_c(m) {
            Some(true) => {
                exists = Some(true);
                break;
            }
            None => exists = None,
            Some(false) => {}
        }
    }
    if !complete && exists == Some(false) {
        exists = None;
    }
    let solvable = c.l.is_solvable();
    t.agreement(exists, Some(solvable), || {
        format!("solvable maximal weak c-ideal exists: {exists:?}; L solvable: {solvable}")
    });
}

fn maximal_nilpotent_weak_c<F: Field>(c: &Ctx<'_, F>, t: &mut Tally) {
    t.conclusion_first(
        Some(c.l.is_solvable()),
        || {
            let nil = c.maximal_nilpotent()?;
            c.all_weak_c(&nil, true)
        },
        || "every maximal nilpotent subalgebra is a weak c-ideal but L is not solvable".into(),
    );
}

/// Cartan subalgebras of the subalgebra `home`, as subspaces of `L`.
fn cartans_in<F: Field>(l: &LeibnizAlgebra<F>, home: &Subspace<F>) -> Vec<Subspace<F>> {
    if home.is_zero() {
        return vec![home.clone()];
    }
    let (sub, embed) = l.restrict(home).expect("subalgebra");
    ideals::cartan_subalgebras(&sub, &[])
        .found
        .iter()
        .map(|h| Subspace::span_unchecked(l.dim(), h.basis().iter().map(|v| embed.apply(v))))
        .collect()
}

fn cartan_composition<F: Field>(c: &Ctx<'_, F>, t: &mut Tally) {
    let Some(levi) = &c.ann.levi else { return };
    if levi.levi.is_zero() {
        return;
    }
    let hs = cartans_in(c.l, &levi.levi);
    if hs.is_empty() {
        t.instances += 1;
        t.undecided += 1;
        return;
    }
    for h in &hs {
        let cent = c.l.centralizer(&levi.radical, h);
        let bs = cartans_in(c.l, &cent);
        if bs.is_empty() {
            t.instances += 1;
            t.undecided += 1;
        }
        for b in &bs {
            t.implication(
                Some(true),
                || Some(ideals::cartan_compose(c.l, levi, h, b).is_ok()),
                || {
                    let err = ideals::cartan_compose(c.l, levi, h, b).err();
                    format!("H = {}, B = {}: {err:?}", c.show(h), c.show(b))
                },
            );
        }
    }
}

fn cartan_weak_c<F: Field>(c: &Ctx<'_, F>, t: &mut Tally) {
    let hints: Vec<Vector<F>> = c
        .ann
        .cartan
        .iter()
        .flat_map(|h| {
            let mut vs = h.basis().to_vec();
            vs.push(h.basis().iter().fold(vec![F::zero(); c.l.dim()], |acc, v| crate::linalg::add(&acc, v)));
            vs
        })
        .collect();
    let search = ideals::cartan_subalgebras(c.l, &hints);
    t.conclusion_first(
        Some(c.l.is_solvable()),
        || {
            if search.found.is_empty() {
                // vacuous hypotheses are not counted as instances of the claim
                return if search.complete { Some(false) } else { None };
            }
            c.all_weak_c(&search.found, search.complete)
        },
        || "every Cartan subalgebra is a weak c-ideal but L is not solvable".into(),
    );
}

fn nilpotent_lift<F: Field>(c: &Ctx<'_, F>, t: &mut Tally) {
    let Some(nil_l) = c.maximal_nilpotent() else { return };
    for a in c.ideals() {
        let (q, map) = c.l.quotient(&a).expect("ideal");
        let nil_q = ideals::maximal_nilpotent_subalgebras(&q).expect("finite");
        for u in &nil_q {
            let up = map.preimage(u);
            t.implication(Some(true), || Some(nil_l.iter().any(|cc| cc.sum(&a) == up)), || {
                format!("U = {} over A = {} is not C + A", c.show(&up), c.show(&a))
            });
        }
    }
}

fn supersolvable<F: Field>(l: &LeibnizAlgebra<F>) -> Option<bool> {
    structure::is_supersolvable(l).decided()
}

fn symmetric_supersolvable<F: Field>(c: &Ctx<'_, F>, t: &mut Tally) {
    t.conclusion_first(
        supersolvable(c.l),
        || {
            if !c.l.is_solvable() || c.l.check_symmetric().decided() != Some(true) {
                return Some(false);
            }
            c.nilpotent_hypothesis()
        },
        || "solvable, symmetric, hypothesis holds, not supersolvable".into(),
    );
}

fn supersolvable_dim_two<F: Field>(c: &Ctx<'_, F>, t: &mut Tally) {
    t.conclusion_first(
        supersolvable(c.l),
        || {
            if c.l.check_symmetric().decided() != Some(true) {
                return Some(false);
            }
            let nil = c.maximal_nilpotent()?;
            if nil.iter().any(|n| n.dim() < 2) {
                return Some(false);
            }
            c.nilpotent_hypothesis()
        },
        || "symmetric, maximal nilpotent dims >= 2, hypothesis holds, not supersolvable".into(),
    );
}

fn supersolvable_or_simple<F: Field>(c: &Ctx<'_, F>, t: &mut Tally) {
    let conclusion = match supersolvable(c.l) {
        Some(true) => Some(true),
        s => {
            let simple3 = if c.l.dim() == 3 { structure::is_simple(c.l).decided() } else { Some(false) };
            match (s, simple3) {
                (_, Some(true)) => Some(true),
                (Some(false), Some(false)) => Some(false),
                _ => None,
            }
        }
    };
    t.conclusion_first(
        conclusion,
        || {
            if c.l.check_symmetric().decided() != Some(true) {
                return Some(false);
            }
            c.nilpotent_hypothesis()
        },
        || "symmetric, hypothesis holds, neither supersolvable nor three-dimensional simple".into(),
    );
}

/// Line subalgebras: all of them over finite fields, else the probe lines.
fn line_subalgebras<F: Field>(c: &Ctx<'_, F>) -> Vec<Subspace<F>> {
    if c.finite() {
        return enumerate_subspaces::<F>(c.l.dim(), 1)
            .expect("finite")
            .filter(|s| c.l.is_subalgebra(s))
            .collect();
    }
    c.subalgebras().0.iter().filter(|s| s.dim() == 1).cloned().collect()
}

fn line_trichotomy<F: Field>(c: &Ctx<'_, F>, t: &mut Tally) {
    let n = c.l.dim();
    let d = c.l.derived();
    for line in line_subalgebras(c) {
        let x = line.basis()[0].clone();
        let weak = c.weak_c(&line);
        let cv = cideal::is_c_ideal(c.l, &line).expect("subalgebra").decided();
        let third = if c.l.is_ideal(&line) {
            Some(true)
        } else if d.contains(&x) {
            Some(false)
        } else if c.finite() {
            let found = enumerate_subspaces::<F>(n, n - 1)
                .expect("finite")
                .any(|b| !b.contains(&x) && c.l.is_ideal(&b));
            Some(found)
        } else {
            None
        };
        let class = cideal::classify_one_dim(c.l, &x).expect("line subalgebra");
        let by_class = match &class {
            LineClass::IdealCase => Some(true),
            LineClass::ComplementedCase(k) => {
                let valid = c.l.is_ideal(k) && k.intersect(&line).is_zero() && k.sum(&line).is_full();
                if !valid {
                    t.instances += 1;
                    t.violations.push(format!("invalid complement {} for {}", c.show(k), c.show(&line)));
                }
                Some(true)
            }
            LineClass::NotCIdeal => Some(false),
        };
        let values = [weak, cv, third, by_class];
        t.instances += 1;
        if weak == Some(true) {
            t.hypothesis += 1;
        }
        let decided: Vec<bool> = values.iter().flatten().copied().collect();
        if decided.len() < values.len() {
            t.undecided += 1;
        }
        if decided.windows(2).any(|w| w[0] != w[1]) {
            t.violations.push(format!(
                "{}: weak c {weak:?}, c {cv:?}, trichotomy {third:?}, structural {by_class:?}",
                c.show(&line)
            ));
        }
    }
}

fn line_criterion<F: Field>(c: &Ctx<'_, F>, t: &mut Tally) {
    let report = cideal::all_one_dim_c_ideals(c.l);
    let show = |v: &Option<Vector<F>>| v.as_ref().map(|v| c.l.render_vector(v));
    // over infinite fields the line loop only refutes, through probe lines
    let (lines, failing) = if c.finite() {
        (report.by_lines, show(&report.failing_line))
    } else {
        let fail = line_subalgebras(c)
            .into_iter()
            .find(|line| cideal::is_c_ideal(c.l, line).expect("subalgebra").is_false());
        (fail.as_ref().map(|_| false), fail.map(|s| c.show(&s)))
    };
    t.agreement(report.by_criterion, lines, || {
        format!(
            "L^2 ∩ J ⊆ Asoc: {:?} (outside: {:?}); every line a c-ideal: {lines:?} (failing: {failing:?})",
            report.by_criterion,
            show(&report.cone_witness)
        )
    });
    t.agreement(report.by_exact, lines, || {
        format!(
            "every element of L^2 ∩ J spans an ideal: {:?} (not: {:?}); every line a c-ideal: {lines:?} (failing: {failing:?})",
            report.by_exact,
            show(&report.exact_witness)
        )
    });
}

fn cyclic_lines<F: Field>(c: &Ctx<'_, F>, t: &mut Tally) {
    let Some(true) = structure::is_cyclic(c.l).decided() else { return };
    let dim_ok = c.l.dim() <= 2;
    t.agreement(c.all_lines_c(), Some(dim_ok), || format!("cyclic of dimension {}", c.l.dim()));
}

fn profile<F: Field>(c: &Ctx<'_, F>, t: &mut Tally) {
    t.implication(
        c.all_lines_c(),
        || Some(structure::one_dim_c_profile(c.l).expect("finite").violations.is_empty()),
        || structure::one_dim_c_profile(c.l).expect("finite").violations.join("; "),
    );
}

fn form_ok<F: Field>(form: &TurnerForm<F>) -> bool {
    matches!(form, TurnerForm::CaseI | TurnerForm::CaseII { lie_type: true, .. })
}

fn symmetric_classification<F: Field>(c: &Ctx<'_, F>, t: &mut Tally) {
    if c.l.check_symmetric().decided() != Some(true) {
        return;
    }
    let form = structure::turner_form(c.l);
    let lines = c.all_lines_c();
    t.agreement(lines, Some(form_ok(&form)), || format!("lines c-ideals {lines:?}, form {}", form.name()));
}

fn refute_turner<F: Field>(c: &Ctx<'_, F>, t: &mut Tally) {
    t.implication(
        c.all_lines_c(),
        || {
            let neither = structure::turner_form(c.l).is_neither();
            if !c.finite() {
                return Some(!neither);
            }
            // the structural decision against the decomposition search
            let exhaustive = structure::turner_form_exhaustive(c.l).expect("finite").is_neither();
            (neither == exhaustive).then_some(!neither)
        },
        || "every line is a c-ideal and the turner form is neither".into(),
    );
}

/// Whether `v` spans a line subalgebra; used by callers building witnesses.
pub fn is_line_subalgebra<F: Field>(l: &LeibnizAlgebra<F>, v: &[F]) -> bool {
    !is_zero_vector(v) && l.is_subalgebra(&Subspace::line(v.to_vec()))
}

/// All nonzero vectors of `F^n` whose span is a subalgebra, finite fields.
pub fn line_generators<F: Field>(l: &LeibnizAlgebra<F>) -> Result<Vec<Vector<F>>, AlgebraError> {
    Ok(all_vectors::<F>(l.dim())?.into_iter().filter(|v| is_line_subalgebra(l, v)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{self, enumerate_corpus, Corpus};
    use crate::field::{Gf, Rational};

    #[test]
    fn registry_matches_statements() {
        let mut covered = BTreeSet::new();
        let mut numbered = 0;
        for (_, cov) in STATEMENTS {
            if let Coverage::Suites(ids) = cov {
                numbered += 1;
                for id in *ids {
                    assert!(suite_info(id).is_some(), "{id}");
                    covered.insert(*id);
                }
            }
        }
        assert_eq!(numbered, 21);
        for s in registry() {
            assert!(covered.contains(s.id), "{} not tied to a statement", s.id);
        }
        let ids: BTreeSet<_> = registry().iter().map(|s| s.id).collect();
        assert_eq!(ids.len(), registry().len());
    }

    #[test]
    fn char0_suites_explore_on_finite_fields() {
        for s in registry() {
            let m = s.mode_for(FieldSpec::Prime(3));
            let refuted = s.applicability == Applicability::Refuted;
            assert_eq!(m == Mode::Explore, refuted || s.applicability == Applicability::Char0Only, "{}", s.id);
            assert_eq!(s.mode_for(FieldSpec::Rationals) == Mode::Explore, refuted);
        }
    }

    #[test]
    fn small_corpus_passes_every_suite() {
        let corpus = enumerate_corpus::<Gf<2>>(2).unwrap();
        for r in run_all(&corpus) {
            assert!(r.passed(), "{}", r.to_text(false));
        }
    }

    #[test]
    fn refutation_on_counterexample() {
        let e = catalog::catalog_entry::<Gf<5>>("turner-counterexample").unwrap();
        let corpus = Corpus::from_catalog(vec![e]);
        let r = run_suite("refute-turner", &corpus).unwrap();
        assert_eq!((r.mode, r.hypothesis_held, r.violations.len()), (Mode::Explore, 1, 1));
    }

    #[test]
    fn rational_catalog_reports() {
        let corpus = Corpus::from_catalog(catalog::catalog::<Rational>());
        let r = run_suite("supersolvable-or-sl2", &corpus).unwrap();
        assert!(r.passed(), "{}", r.to_text(false));
        let r = run_suite("cartan-composition", &corpus).unwrap();
        assert!(r.passed() && r.hypothesis_held >= 3, "{}", r.to_text(false));
        assert!(matches!(
            run_suite("frattini-weak-c", &corpus),
            Err(HarnessError::Applicability { .. })
        ));
    }

    #[test]
    fn report_json_separates_timing() {
        let corpus = enumerate_corpus::<Gf<3>>(1).unwrap();
        let r = run_suite("c-ideal-implies-weak-c", &corpus).unwrap();
        assert!(r.to_json(false).get("wall_time_ms").is_none());
        assert!(r.to_json(true).get("wall_time_ms").is_some());
        assert_eq!(r.to_json(false)["suite"], "c-ideal-implies-weak-c");
    }
}
