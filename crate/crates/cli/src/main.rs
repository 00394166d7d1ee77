use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use leibniz::catalog::{self, Annotations, Corpus};
use leibniz::cideal::{self, WeakCCertificate};
use leibniz::harness::{self, TheoremReport};
use leibniz::ideals;
use leibniz::io::{self, AlgebraFile, IoError};
use leibniz::structure::{self, StructureProfile, TurnerForm};
use leibniz::{Field, FieldSpec, Gf, LeibnizAlgebra, Rational, Subspace, Verdict};

/// Exact decision procedures for Leibniz algebras given by structure
/// constants.
#[derive(Parser)]
#[command(name = "leibniz", version)]
struct Cli {
    /// Worker threads for enumeration and suites.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Validate an algebra file and print its structure.
    Check {
        file: PathBuf,
        /// Report identity failures instead of rejecting the file.
        #[arg(long)]
        allow_nonleibniz: bool,
    },
    /// Decide one predicate. Subspaces are rows like `a+b;x` or `1,0,0`.
    Predicate {
        file: PathBuf,
        /// ideal, subideal, core, c-ideal, weak-c-ideal, frattini, cartan,
        /// asoc, supersolvable or turner-form.
        name: String,
        subspace: Option<String>,
    },
    /// Write the exhaustive corpus of one dimension over GF(p).
    Enumerate {
        #[arg(long)]
        field: String,
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run a suite, or `all`, over a corpus.
    Verify {
        suite: String,
        /// exhaustive, catalog, random, an algebra file or a corpus directory.
        #[arg(long, default_value = "catalog")]
        corpus: String,
        #[arg(long, default_value = "Q")]
        field: String,
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Size of a random corpus.
        #[arg(long, default_value_t = 20)]
        count: usize,
        /// Also write the reports as JSON here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Include wall times.
        #[arg(long)]
        timing: bool,
    },
    /// List catalog entries or print one as an algebra file.
    Catalog {
        name: Option<String>,
        #[arg(long, default_value = "Q")]
        field: String,
        /// Write every entry as `<name>.alg` here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the suites.
    Suites,
}

enum Failure {
    /// Exit 1.
    Violation,
    /// Exit 2.
    Usage(String),
}

type Outcome = Result<(), Failure>;

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

/// Instantiates `$body` with the type alias `$f` for the field `$spec`.
macro_rules! with_field {
    ($spec:expr, $f:ident => $body:expr) => {
        match $spec {
            FieldSpec::Rationals => {
                type $f = Rational;
                $body
            }
            FieldSpec::Prime(2) => {
                type $f = Gf<2>;
                $body
            }
            FieldSpec::Prime(3) => {
                type $f = Gf<3>;
                $body
            }
            FieldSpec::Prime(5) => {
                type $f = Gf<5>;
                $body
            }
            FieldSpec::Prime(7) => {
                type $f = Gf<7>;
                $body
            }
            FieldSpec::Prime(11) => {
                type $f = Gf<11>;
                $body
            }
            FieldSpec::Prime(13) => {
                type $f = Gf<13>;
                $body
            }
            FieldSpec::Prime(p) => Err(usage(format!("GF({p}) is not supported; use Q or GF(p) for p in 2, 3, 5, 7, 11, 13"))),
        }
    };
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let json = cli.json;
    let result = match cli.cmd {
        Cmd::Check { file, allow_nonleibniz } => check(&file, allow_nonleibniz, json),
        Cmd::Predicate { file, name, subspace } => predicate(&file, &name, subspace.as_deref(), json),
        Cmd::Enumerate { field, dim, out } => {
            parse_field(&field).and_then(|spec| with_field!(spec, F => enumerate::<F>(dim, &out, json)))
        }
        Cmd::Verify { suite, corpus, field, dim, seed, count, out, timing } => {
            let opts = VerifyOpts { suite, corpus, dim, seed, count, out, timing, json };
            verify_dispatch(&field, &opts)
        }
        Cmd::Catalog { name, field, out } => {
            parse_field(&field).and_then(|spec| with_field!(spec, F => catalog_cmd::<F>(name.as_deref(), out.as_deref(), json)))
        }
        Cmd::Suites => suites(json),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Violation) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn parse_field(s: &str) -> Result<FieldSpec, Failure> {
    s.parse::<FieldSpec>().map_err(usage)
}

fn read_file(path: &Path) -> Result<(AlgebraFile, String), Failure> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let file = AlgebraFile::parse(&text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    Ok((file, text))
}

fn emit(json: bool, value: Value, text: String) {
    if json {
        println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
    } else {
        print!("{text}");
    }
}

fn check(path: &Path, allow_nonleibniz: bool, json: bool) -> Outcome {
    let (file, _) = read_file(path)?;
    with_field!(file.field, F => check_in::<F>(&file, allow_nonleibniz, json))
}

fn check_in<F: Field>(file: &AlgebraFile, allow_nonleibniz: bool, json: bool) -> Outcome {
    let table = file.table::<F>().map_err(usage)?;
    let right = table.right_failure();
    if let (Some(failure), true) = (right, allow_nonleibniz) {
        let labels = table.labels();
        let name = |t: (usize, usize, usize)| format!("({}, {}, {})", labels[t.0], labels[t.1], labels[t.2]);
        let left = table.left_failure();
        let value = json!({
            "right": false,
            "right_failure": name(failure),
            "left": left.is_none(),
            "left_failure": left.map(name),
        });
        let text = format!(
            "right Leibniz: fails at {}\nleft Leibniz: {}\n",
            name(failure),
            left.map_or("holds".to_string(), |t| format!("fails at {}", name(t)))
        );
        emit(json, value, text);
        return Ok(());
    }
    let l = LeibnizAlgebra::new(table).map_err(usage)?;
    let ann = file.annotations(&l).map_err(usage)?;
    let profile = StructureProfile::of(&l);
    let show = |s: &Subspace<F>| l.render_subspace(s);
    let series = |v: Vec<Subspace<F>>| v.iter().map(show).collect::<Vec<_>>();
    let lines = cideal::all_one_dim_c_ideals(&l).verdict();
    let value = json!({
        "name": file.name,
        "profile": profile,
        "kernel": show(&l.kernel()),
        "center": show(&l.center()),
        "derived_series": series(l.derived_series()),
        "lower_central_series": series(l.lower_central_series()),
        "symmetric": verdict_json(&l.check_symmetric(), |_| Value::Null),
        "all_lines_c_ideals": verdict_json(&lines, |_| Value::Null),
        "annotations": { "cartan": ann.cartan.iter().map(show).collect::<Vec<_>>(), "levi": ann.levi.as_ref().map(|d| show(&d.levi)) },
    });
    let mut text = String::new();
    if let Some(n) = &file.name {
        text.push_str(&format!("{n}\n"));
    }
    text.push_str(&format!("{}-dimensional over {}\n", l.dim(), F::spec()));
    text.push_str(&format!("right Leibniz: holds\nleft Leibniz: {}\n", if profile.left { "holds" } else { "fails" }));
    text.push_str(&format!("symmetric: {}\nLie: {}\n", l.check_symmetric(), profile.lie));
    text.push_str(&format!("kernel: {}\ncenter: {}\n", show(&l.kernel()), show(&l.center())));
    text.push_str(&format!("derived series: {}\n", series(l.derived_series()).join(" > ")));
    text.push_str(&format!("lower central series: {}\n", series(l.lower_central_series()).join(" > ")));
    text.push_str(&format!(
        "nilpotency class: {}\nderived length: {}\nsolvable: {}\nsupersolvable: {}\nsimple: {}\n",
        opt(profile.nilpotency_class),
        opt(profile.derived_length),
        profile.solvable,
        opt(profile.supersolvable),
        opt(profile.simple)
    ));
    text.push_str(&format!(
        "cyclic: {}\nalmost abelian: {}\nturner form: {}\nevery line a c-ideal: {lines}\n",
        opt(profile.cyclic),
        profile.almost_abelian,
        profile.turner_form
    ));
    emit(json, value, text);
    Ok(())
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or("unknown".into(), |x| x.to_string())
}

fn verdict_json<W>(v: &Verdict<W>, witness: impl Fn(&W) -> Value) -> Value {
    json!({
        "outcome": v.outcome,
        "method": v.method,
        "note": v.note,
        "witness": v.witness.as_ref().map(witness),
    })
}

fn predicate(path: &Path, name: &str, subspace: Option<&str>, json: bool) -> Outcome {
    let (file, _) = read_file(path)?;
    with_field!(file.field, F => predicate_in::<F>(&file, name, subspace, json))
}

fn predicate_in<F: Field>(file: &AlgebraFile, name: &str, subspace: Option<&str>, json: bool) -> Outcome {
    let l = file.algebra::<F>().map_err(usage)?;
    let ann = file.annotations(&l).map_err(usage)?;
    let show = |s: &Subspace<F>| l.render_subspace(s);
    let needs = || -> Result<Subspace<F>, Failure> {
        let text = subspace.ok_or_else(|| usage(format!("predicate {name} needs a subspace")))?;
        io::parse_subspace::<F>(text, l.labels()).map_err(usage)
    };
    let subalgebra = || -> Result<Subspace<F>, Failure> {
        let b = needs()?;
        if !l.is_subalgebra(&b) {
            return Err(usage(format!("{} is not a subalgebra", show(&b))));
        }
        Ok(b)
    };
    let (value, text) = match name {
        "ideal" => {
            let b = needs()?;
            let v = l.is_ideal(&b);
            (json!({ "subspace": show(&b), "ideal": v }), format!("{} is an ideal: {v}\n", show(&b)))
        }
        "subideal" => {
            let b = subalgebra()?;
            let chain = ideals::is_subideal(&l, &b).map_err(usage)?;
            let links = chain.map(|c| c.links.iter().map(show).collect::<Vec<_>>());
            let text = match &links {
                Some(ls) => format!("{} is a subideal: {}\n", show(&b), ls.join(" ◁ ")),
                None => format!("{} is not a subideal\n", show(&b)),
            };
            (json!({ "subspace": show(&b), "subideal": links.is_some(), "chain": links }), text)
        }
        "core" => {
            let b = subalgebra()?;
            let c = ideals::core(&l, &b);
            (json!({ "subspace": show(&b), "core": show(&c) }), format!("core of {}: {}\n", show(&b), show(&c)))
        }
        "c-ideal" => {
            let b = subalgebra()?;
            let v = cideal::is_c_ideal(&l, &b).map_err(usage)?;
            let w = v.witness.as_ref().map(|k| format!(", ideal complement {}", show(k))).unwrap_or_default();
            (
                json!({ "subspace": show(&b), "verdict": verdict_json(&v, |k| json!(show(k))) }),
                format!("{} is a c-ideal: {v}{w}\n", show(&b)),
            )
        }
        "weak-c-ideal" => {
            let b = subalgebra()?;
            let v = cideal::is_weak_c_ideal(&l, &b).map_err(usage)?;
            let cert = |c: &WeakCCertificate<F>| {
                json!({
                    "complement": show(&c.complement),
                    "chain": c.chain.links.iter().map(show).collect::<Vec<_>>(),
                    "core": show(&c.core),
                })
            };
            let w = v
                .witness
                .as_ref()
                .map(|c| {
                    let chain: Vec<_> = c.chain.links.iter().map(show).collect();
                    format!("\n  complement {}\n  chain {}\n  core {}", show(&c.complement), chain.join(" ◁ "), show(&c.core))
                })
                .unwrap_or_default();
            (
                json!({ "subspace": show(&b), "verdict": verdict_json(&v, cert) }),
                format!("{} is a weak c-ideal: {v}{w}\n", show(&b)),
            )
        }
        "frattini" => {
            let f = ideals::frattini(&l).map_err(usage)?;
            (
                json!({ "frattini_subalgebra": show(&f.subalgebra), "frattini_ideal": show(&f.ideal) }),
                format!("Frattini subalgebra: {}\nFrattini ideal: {}\n", show(&f.subalgebra), show(&f.ideal)),
            )
        }
        "cartan" => match subspace {
            Some(_) => {
                let h = needs()?;
                let v = ideals::is_cartan(&l, &h);
                (json!({ "subspace": show(&h), "cartan": v }), format!("{} is a Cartan subalgebra: {v}\n", show(&h)))
            }
            None => {
                let hints: Vec<_> = ann.cartan.iter().flat_map(|h| h.basis().to_vec()).collect();
                let s = ideals::cartan_subalgebras(&l, &hints);
                let found: Vec<_> = s.found.iter().map(show).collect();
                let text = format!(
                    "Cartan subalgebras ({}): {}\n",
                    if s.complete { "complete" } else { "found so far" },
                    found.join(", ")
                );
                (json!({ "cartan_subalgebras": found, "complete": s.complete }), text)
            }
        },
        "asoc" => {
            let v = ideals::asoc(&l);
            let w = v.witness.as_ref().map(show).unwrap_or_default();
            (json!({ "verdict": verdict_json(&v, |s| json!(show(s))) }), format!("Asoc: {w} [{v}]\n"))
        }
        "supersolvable" => {
            let v = structure::is_supersolvable(&l);
            let flag = v.witness.as_ref().map(|f| f.iter().map(show).collect::<Vec<_>>().join(" < ")).unwrap_or_default();
            (
                json!({ "verdict": verdict_json(&v, |f| json!(f.iter().map(show).collect::<Vec<_>>())) }),
                format!("supersolvable: {v}\n{}", if flag.is_empty() { String::new() } else { format!("  flag {flag}\n") }),
            )
        }
        "turner-form" => {
            let form = structure::turner_form(&l);
            let detail = match &form {
                TurnerForm::CaseII { a, b, lie_type } => json!({ "a": show(a), "b": show(b), "lie_type": lie_type }),
                _ => Value::Null,
            };
            let text = match &form {
                TurnerForm::CaseII { a, b, lie_type } => {
                    format!("turner form: case-ii, A = {}, B = {}, Lie type {lie_type}\n", show(a), show(b))
                }
                f => format!("turner form: {}\n", f.name()),
            };
            (json!({ "turner_form": form.name(), "detail": detail }), text)
        }
        other => return Err(usage(format!("unknown predicate `{other}`"))),
    };
    emit(json, value, text);
    Ok(())
}

fn enumerate<F: Field>(dim: usize, out: &Path, json: bool) -> Outcome {
    let corpus = catalog::enumerate_corpus::<F>(dim).map_err(usage)?;
    let m = io::write_corpus(&corpus, out).map_err(usage)?;
    let text = format!(
        "{}: {} algebras{} -> {}\n",
        m.descriptor,
        m.count,
        m.golden.map(|g| format!(" (recorded {g})")).unwrap_or_default(),
        out.display()
    );
    emit(json, serde_json::to_value(&m).expect("serializable"), text);
    match m.golden {
        Some(g) if g != m.count => Err(Failure::Violation),
        _ => Ok(()),
    }
}

struct VerifyOpts {
    suite: String,
    corpus: String,
    dim: Option<usize>,
    seed: u64,
    count: usize,
    out: Option<PathBuf>,
    timing: bool,
    json: bool,
}

fn verify_dispatch(field: &str, opts: &VerifyOpts) -> Outcome {
    let path = Path::new(&opts.corpus);
    let builtin = matches!(opts.corpus.as_str(), "exhaustive" | "catalog" | "random");
    // files and corpus directories name their own field
    let spec = if builtin {
        parse_field(field)?
    } else if path.is_dir() {
        let m: io::Manifest = serde_json::from_str(
            &fs::read_to_string(path.join(io::MANIFEST_FILE)).map_err(|e| usage(format!("{}: {e}", path.display())))?,
        )
        .map_err(usage)?;
        parse_field(&m.field)?
    } else {
        read_file(path)?.0.field
    };
    with_field!(spec, F => verify::<F>(opts))
}

fn load_corpus<F: Field>(opts: &VerifyOpts) -> Result<Corpus<F>, Failure> {
    let need_dim = || opts.dim.ok_or_else(|| usage(format!("--corpus {} needs --dim", opts.corpus)));
    match opts.corpus.as_str() {
        "exhaustive" => catalog::enumerate_corpus::<F>(need_dim()?).map_err(usage),
        "catalog" => Ok(Corpus::from_catalog(catalog::catalog::<F>())),
        "random" => catalog::random_extension_corpus::<F>(opts.seed, need_dim()?, opts.count).map_err(usage),
        p => {
            let path = Path::new(p);
            if path.is_dir() {
                return io::read_corpus::<F>(path).map(|(c, _)| c).map_err(usage);
            }
            let text = fs::read_to_string(path).map_err(|e| usage(format!("{p}: {e}")))?;
            let (file, l, ann) = io::load::<F>(&text).map_err(|e: IoError| usage(format!("{p}: {e}")))?;
            Ok(Corpus::single(file.name.unwrap_or_else(|| p.to_string()), l, ann))
        }
    }
}

fn verify<F: Field>(opts: &VerifyOpts) -> Outcome {
    let corpus = load_corpus::<F>(opts)?;
    let reports: Vec<TheoremReport> = if opts.suite == "all" {
        harness::run_all(&corpus)
    } else {
        vec![harness::run_suite(&opts.suite, &corpus).map_err(usage)?]
    };
    let values: Vec<Value> = reports.iter().map(|r| r.to_json(opts.timing)).collect();
    let text: String = reports.iter().map(|r| r.to_text(opts.timing)).collect();
    if let Some(out) = &opts.out {
        let body = serde_json::to_string_pretty(&values).expect("serializable") + "\n";
        fs::write(out, body).map_err(|e| usage(format!("{}: {e}", out.display())))?;
    }
    emit(opts.json, Value::Array(values), text);
    if reports.iter().all(TheoremReport::passed) {
        Ok(())
    } else {
        Err(Failure::Violation)
    }
}

fn catalog_cmd<F: Field>(name: Option<&str>, out: Option<&Path>, json: bool) -> Outcome {
    let entries = catalog::catalog::<F>();
    let emit_entry = |e: &catalog::CatalogEntry<F>| {
        let ann = Annotations { levi: e.levi.clone(), cartan: e.cartan.clone() };
        io::emit(Some(&e.name), &e.algebra, &ann)
    };
    if let Some(dir) = out {
        fs::create_dir_all(dir).map_err(usage)?;
        for e in entries.iter().filter(|e| name.is_none_or(|n| n == e.name)) {
            fs::write(dir.join(format!("{}.alg", e.name)), emit_entry(e)).map_err(usage)?;
        }
    }
    match name {
        Some(n) => {
            let e = catalog::catalog_entry::<F>(n).map_err(usage)?;
            let text = emit_entry(&e);
            emit(json, json!({ "name": e.name, "file": text }), text);
        }
        None => {
            let names: Vec<&str> = entries.iter().map(|e| e.name.as_str()).collect();
            let text: String = entries
                .iter()
                .map(|e| format!("{:<34} dim {}  {:?}\n", e.name, e.algebra.dim(), e.facts))
                .collect();
            emit(json, json!(names), text);
        }
    }
    Ok(())
}

fn suites(json: bool) -> Outcome {
    let reg = harness::registry();
    let text: String = reg
        .iter()
        .map(|s| format!("{:<34} {:<24} {}\n", s.id, format!("{:?}", s.applicability), s.claim))
        .collect();
    emit(json, serde_json::to_value(reg).expect("serializable"), text);
    Ok(())
}
