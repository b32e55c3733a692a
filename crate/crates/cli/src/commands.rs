//! One function per subcommand. Each returns an [`Outcome`]: the payload is
//! the machine-readable answer, the summary is the one-line human answer.
//! Axiom failures are outcomes with `ok = false`; inputs that do not even
//! parse as the right kind of object surface as [`Error`]s instead.

use std::fs;
use std::path::Path;

use serde_json::{json, Value};

use braidmorita_core::algebra::check_algebra;
use braidmorita_core::braid::{
    rep_type_a, rep_type_bc, rep_type_d, trace_signature, trace_word, verify_relations, BraidRep,
    BraidWord,
};
use braidmorita_core::catalog::default_entries;
use braidmorita_core::comodule::{
    check_comodule_algebra, check_k_matrix, ComoduleAlgebraData, KMatrix,
};
use braidmorita_core::distinguish::{distinguish, Reason, SearchParams, Verdict};
use braidmorita_core::group::{
    centralizer, cyclic_group, enumerate_subgroups, klein_group, pair_conjugacy_classes,
    symmetric3, GroupTable,
};
use braidmorita_core::hopf::{check_hopf, HopfData};
use braidmorita_core::json::{
    read_algebra_file, read_comodule_file, read_group_file, read_hopf_json, signature_json,
    solution_report_json, tensor_from_pairs, ComoduleJson, HopfJson,
};
use braidmorita_core::report::CheckReport;
use braidmorita_core::rmatrix::{check_r_matrix, is_triangular_r, RMatrix};
use braidmorita_core::solver::{solve_k, SolveStatus};
use braidmorita_core::tensor::{parse_tensor_expression, TensorElement};
use braidmorita_core::Error;

pub struct Outcome {
    pub ok: bool,
    pub summary: String,
    pub payload: Value,
    /// Extra lines printed under the summary in human mode.
    pub detail: Vec<String>,
}

impl Outcome {
    fn new(ok: bool, summary: impl Into<String>, payload: Value) -> Self {
        Outcome {
            ok,
            summary: summary.into(),
            payload,
            detail: Vec::new(),
        }
    }

    fn with_detail(mut self, detail: Vec<String>) -> Self {
        self.detail = detail;
        self
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum RepKind {
    A,
    Bc,
    D,
}

impl RepKind {
    fn name(self) -> &'static str {
        match self {
            RepKind::A => "A",
            RepKind::Bc => "BC",
            RepKind::D => "D",
        }
    }
}

pub struct RepSpec<'a> {
    pub hopf: &'a Path,
    pub comodule: Option<&'a Path>,
    pub k: Option<&'a str>,
    pub kind: RepKind,
    pub n: usize,
}

pub struct DistinguishSpec<'a> {
    pub hopf: &'a Path,
    pub left_comodule: &'a Path,
    pub left_k: &'a str,
    pub right_comodule: &'a Path,
    pub right_k: &'a str,
    pub n: usize,
    pub maxlen: usize,
}

fn report_lines(report: &CheckReport) -> Vec<String> {
    report.to_string().lines().map(str::to_string).collect()
}

/// Standard outcome for an axiom checker: ok iff everything passed, with the
/// per-axiom listing as human detail and the serialized report as payload.
fn checked(object: &str, mut payload: Value, report: CheckReport) -> Outcome {
    let passed = report.passed();
    let summary = match report.first_failure() {
        None => format!("{object} axioms hold"),
        Some(fail) => format!("{object} axiom failed: {}", fail.axiom),
    };
    let map = payload.as_object_mut().expect("payload is an object");
    map.insert("passed".into(), Value::Bool(passed));
    map.insert(
        "report".into(),
        serde_json::to_value(&report).expect("report serializes"),
    );
    Outcome::new(passed, summary, payload).with_detail(report_lines(&report))
}

fn load_host(path: &Path) -> Result<(HopfData, RMatrix), Error> {
    let json = read_hopf_json(path)?;
    let h = json.hopf()?;
    let r = json.rmatrix(&h)?.ok_or_else(|| {
        Error::bad(format!(
            "{}: no rmatrix field; this command needs a quasitriangular host",
            path.display()
        ))
    })?;
    Ok((h, r))
}

fn load_carrier(
    h: &HopfData,
    path: &Path,
    k_expr: &str,
) -> Result<(ComoduleAlgebraData, TensorElement), Error> {
    let c = read_comodule_file(path)?;
    if c.host() != h {
        return Err(Error::HostMismatch);
    }
    let element = parse_tensor_expression(k_expr, &[c.host().algebra(), c.algebra()])?;
    Ok((c, element))
}

pub fn verify_algebra(path: &Path) -> Result<Outcome, Error> {
    let a = read_algebra_file(path)?;
    let report = check_algebra(&a);
    Ok(checked("algebra", json!({ "dim": a.dim() }), report))
}

pub fn verify_hopf(path: &Path) -> Result<Outcome, Error> {
    let h = read_hopf_json(path)?.hopf()?;
    let report = check_hopf(&h);
    Ok(checked("Hopf", json!({ "dim": h.dim() }), report))
}

pub fn verify_rmatrix(path: &Path) -> Result<Outcome, Error> {
    let json = read_hopf_json(path)?;
    let h = json.hopf()?;
    let pairs = json
        .rmatrix
        .ok_or_else(|| Error::bad(format!("{}: no rmatrix field to verify", path.display())))?;
    let element = tensor_from_pairs(h.dim(), h.dim(), &pairs)?;
    let report = check_r_matrix(&h, &element);
    let triangular = report
        .passed()
        .then(|| is_triangular_r(&RMatrix::new(&h, element).expect("axioms just checked")));
    let mut outcome = checked(
        "R-matrix",
        json!({ "dim": h.dim(), "triangular": triangular }),
        report,
    );
    if let Some(t) = triangular {
        outcome.summary = format!(
            "R-matrix axioms hold ({})",
            if t { "triangular" } else { "not triangular" }
        );
    }
    Ok(outcome)
}

pub fn verify_comodule(path: &Path) -> Result<Outcome, Error> {
    let c = read_comodule_file(path)?;
    let report = check_comodule_algebra(&c);
    Ok(checked(
        "comodule algebra",
        json!({ "host_dim": c.host().dim(), "dim": c.dim() }),
        report,
    ))
}

pub fn verify_kmatrix(hopf: &Path, comodule: &Path, k: &str) -> Result<Outcome, Error> {
    let (h, r) = load_host(hopf)?;
    let (c, element) = load_carrier(&h, comodule, k)?;
    let display = element.display(&[c.host().algebra(), c.algebra()]);
    let report = check_k_matrix(&r, &c, &element);
    let mut outcome = checked("K-matrix", json!({ "k": display.clone() }), report);
    if outcome.ok {
        outcome.summary = format!("K-matrix axioms hold for {display}");
    }
    Ok(outcome)
}

fn build_rep(spec: &RepSpec) -> Result<BraidRep, Error> {
    let (h, r) = load_host(spec.hopf)?;
    match spec.kind {
        RepKind::A => {
            if spec.comodule.is_some() || spec.k.is_some() {
                return Err(Error::bad(
                    "type A acts on tensor powers of the host alone; drop --comodule and --k",
                ));
            }
            rep_type_a(&h, &r, spec.n)
        }
        RepKind::Bc | RepKind::D => {
            let path = spec
                .comodule
                .ok_or_else(|| Error::bad("types BC and D need --comodule"))?;
            let expr = spec.k.ok_or_else(|| Error::bad("types BC and D need --k"))?;
            let (c, element) = load_carrier(&h, path, expr)?;
            let k = KMatrix::new(&r, &c, element)?;
            match spec.kind {
                RepKind::Bc => rep_type_bc(&h, &r, &c, &k, spec.n),
                _ => rep_type_d(&h, &r, &c, &k, spec.n),
            }
        }
    }
}

pub fn braidrep_build(spec: &RepSpec) -> Result<Outcome, Error> {
    let rep = build_rep(spec)?;
    let generators = rep.presentation().generators().to_vec();
    let relations: Vec<String> = rep
        .presentation()
        .relations()
        .iter()
        .map(|(l, r)| format!("{l} = {r}"))
        .collect();
    let summary = format!(
        "type {} representation for n = {} on dimension {} ({} generators, {} relations)",
        spec.kind.name(),
        spec.n,
        rep.dim(),
        generators.len(),
        relations.len()
    );
    let detail = relations.clone();
    Ok(Outcome::new(
        true,
        summary,
        json!({
            "type": spec.kind.name(),
            "n": spec.n,
            "dim": rep.dim(),
            "generators": generators,
            "relations": relations,
        }),
    )
    .with_detail(detail))
}

pub fn braidrep_check(spec: &RepSpec) -> Result<Outcome, Error> {
    let rep = build_rep(spec)?;
    let report = verify_relations(&rep);
    let count = report.checks.len();
    let mut outcome = checked(
        "braid relation",
        json!({ "type": spec.kind.name(), "n": spec.n, "dim": rep.dim() }),
        report,
    );
    if outcome.ok {
        outcome.summary = format!(
            "type {}, n = {}: all {count} relations hold on dimension {}",
            spec.kind.name(),
            spec.n,
            rep.dim()
        );
    }
    Ok(outcome)
}

pub fn braidrep_trace(spec: &RepSpec, word: &str) -> Result<Outcome, Error> {
    let rep = build_rep(spec)?;
    let w = BraidWord::parse(word)?;
    let value = trace_word(&rep, &w)?;
    Ok(Outcome::new(
        true,
        format!("trace({w}) = {value}"),
        json!({
            "type": spec.kind.name(),
            "n": spec.n,
            "dim": rep.dim(),
            "word": w.to_string(),
            "trace": value,
        }),
    ))
}

pub fn braidrep_signature(spec: &RepSpec, maxlen: usize) -> Result<Outcome, Error> {
    let rep = build_rep(spec)?;
    let sig = trace_signature(&rep, maxlen);
    let detail: Vec<String> = sig.iter().map(|(w, t)| format!("{w}: {t}")).collect();
    Ok(Outcome::new(
        true,
        format!(
            "{} word traces up to length {maxlen} on dimension {}",
            sig.len(),
            rep.dim()
        ),
        json!({
            "type": spec.kind.name(),
            "n": spec.n,
            "dim": rep.dim(),
            "maxlen": maxlen,
            "signature": signature_json(&sig),
        }),
    )
    .with_detail(detail))
}

pub fn classify_kmatrices(hopf: &Path, comodule: &Path) -> Result<Outcome, Error> {
    let (h, r) = load_host(hopf)?;
    let c = read_comodule_file(comodule)?;
    if c.host() != &h {
        return Err(Error::HostMismatch);
    }
    let report = solve_k(&r, &c);
    let json_report = solution_report_json(&report, &h, c.algebra());
    let summary = match report.status {
        SolveStatus::Finite if json_report.solutions_display.is_empty() => {
            "FINITE: no K-matrices".to_string()
        }
        SolveStatus::Finite => format!("FINITE: {}", json_report.solutions_display.join(", ")),
        SolveStatus::Parametric => {
            format!("PARAMETRIC: {} solution families", json_report.families.len())
        }
        SolveStatus::Residual => {
            format!("RESIDUAL: {} unresolved equations", json_report.residual.len())
        }
    };
    let detail = json_report.trace.clone();
    Ok(Outcome::new(
        true,
        summary,
        serde_json::to_value(&json_report).expect("report serializes"),
    )
    .with_detail(detail))
}

fn resolve_group(spec: &str) -> Result<GroupTable, Error> {
    match spec {
        "C2xC2" => return Ok(klein_group()),
        "S3" => return Ok(symmetric3()),
        _ => {}
    }
    if let Some(n) = spec.strip_prefix('C').and_then(|s| s.parse::<usize>().ok()) {
        if n >= 2 {
            return Ok(cyclic_group(n));
        }
    }
    let path = Path::new(spec);
    if path.exists() {
        return read_group_file(path);
    }
    Err(Error::bad(format!(
        "unknown group `{spec}`: use Cn (n ≥ 2), C2xC2, S3, or a path to a group file"
    )))
}

fn subgroup_labels(g: &GroupTable, l: &[usize]) -> Vec<String> {
    l.iter().map(|&i| g.label(i).to_string()).collect()
}

pub fn group_subgroups(spec: &str) -> Result<Outcome, Error> {
    let g = resolve_group(spec)?;
    let subgroups = enumerate_subgroups(&g);
    let listed: Vec<Value> = subgroups
        .iter()
        .map(|l| {
            json!({
                "order": l.len(),
                "elements": subgroup_labels(&g, l),
                "centralizer": subgroup_labels(&g, &centralizer(&g, l)),
            })
        })
        .collect();
    let detail: Vec<String> = subgroups
        .iter()
        .map(|l| format!("{{{}}}", subgroup_labels(&g, l).join(", ")))
        .collect();
    Ok(Outcome::new(
        true,
        format!("{} subgroups of {}", subgroups.len(), g.name()),
        json!({
            "group": g.name(),
            "order": g.order(),
            "subgroups": listed,
        }),
    )
    .with_detail(detail))
}

pub fn group_classify(spec: &str, u_label: &str) -> Result<Outcome, Error> {
    let g = resolve_group(spec)?;
    let u = g
        .labels()
        .iter()
        .position(|l| l == u_label)
        .ok_or_else(|| Error::bad(format!("unknown element `{u_label}` of {}", g.name())))?;
    let classes = pair_conjugacy_classes(&g, u)?;
    let rendered: Vec<Vec<String>> = classes
        .iter()
        .map(|class| {
            class
                .iter()
                .map(|(l, a)| {
                    format!("(k{{{}}}, {}⊗1)", subgroup_labels(&g, l).join(","), g.label(*a))
                })
                .collect()
        })
        .collect();
    let listed: Vec<Value> = classes
        .iter()
        .zip(&rendered)
        .map(|(class, names)| {
            let pairs: Vec<Value> = class
                .iter()
                .map(|(l, a)| {
                    json!({
                        "subgroup": subgroup_labels(&g, l),
                        "element": g.label(*a),
                    })
                })
                .collect();
            json!({ "representative": names[0], "pairs": pairs })
        })
        .collect();
    let detail: Vec<String> = rendered
        .iter()
        .map(|names| format!("{{{}}}", names.join(", ")))
        .collect();
    Ok(Outcome::new(
        true,
        format!(
            "{} classes of (subgroup, element) pairs for {} with u = {}",
            classes.len(),
            g.name(),
            g.label(u)
        ),
        json!({
            "group": g.name(),
            "u": g.label(u),
            "classes": listed,
        }),
    )
    .with_detail(detail))
}

pub fn run_distinguish(spec: &DistinguishSpec) -> Result<Outcome, Error> {
    let (h, r) = load_host(spec.hopf)?;
    let load = |path: &Path, expr: &str| -> Result<(ComoduleAlgebraData, KMatrix), Error> {
        let (c, element) = load_carrier(&h, path, expr)?;
        let k = KMatrix::new(&r, &c, element)?;
        Ok((c, k))
    };
    let (cl, kl) = load(spec.left_comodule, spec.left_k)?;
    let (cr, kr) = load(spec.right_comodule, spec.right_k)?;
    let params = SearchParams {
        n: spec.n,
        max_len: spec.maxlen,
    };
    let verdict = distinguish(&r, (&cl, &kl), (&cr, &kr), params)?;
    let payload = match &verdict {
        Verdict::Distinguished(Reason::Dimension { left, right }) => json!({
            "kind": "distinguished", "invariant": "dimension", "left": left, "right": right,
        }),
        Verdict::Distinguished(Reason::Semisimplicity { left, right }) => json!({
            "kind": "distinguished", "invariant": "semisimplicity", "left": left, "right": right,
        }),
        Verdict::Distinguished(Reason::Trace { word, left, right }) => json!({
            "kind": "distinguished", "invariant": "trace", "word": word,
            "left": left, "right": right,
        }),
        Verdict::Equivalent { conjugator } => json!({
            "kind": "equivalent", "conjugator": conjugator,
        }),
        Verdict::NotDistinguished { n, max_len } => json!({
            "kind": "not_distinguished", "n": n, "max_len": max_len,
        }),
    };
    Ok(Outcome::new(true, verdict.to_string(), payload))
}

pub fn catalog_list() -> Result<Outcome, Error> {
    let entries = default_entries();
    let listed: Vec<Value> = entries
        .iter()
        .map(|e| {
            let carriers: Vec<Value> = e
                .carriers
                .iter()
                .map(|c| {
                    let known: Vec<String> = c
                        .known_k
                        .iter()
                        .map(|k| k.display(&[e.hopf.algebra(), c.comodule.algebra()]))
                        .collect();
                    json!({ "name": c.name, "dim": c.comodule.dim(), "known_k": known })
                })
                .collect();
            json!({
                "name": e.name,
                "hopf_dim": e.hopf.dim(),
                "triangular": is_triangular_r(&e.rmatrix),
                "carriers": carriers,
            })
        })
        .collect();
    let detail: Vec<String> = entries
        .iter()
        .map(|e| {
            let names: Vec<String> = e.carriers.iter().map(|c| c.name.clone()).collect();
            format!("{} (dim {}): {}", e.name, e.hopf.dim(), names.join(", "))
        })
        .collect();
    Ok(Outcome::new(
        true,
        format!("{} catalog entries", entries.len()),
        json!({ "entries": listed }),
    )
    .with_detail(detail))
}

/// File-safe stem: alphanumerics, `-`, and `_` survive; every other run of
/// characters collapses to one `-`.
fn slug(name: &str) -> String {
    let mut out = String::new();
    for ch in name.chars() {
        if ch.is_ascii_alphanumeric() || ch == '-' || ch == '_' {
            out.push(ch);
        } else if !out.is_empty() && !out.ends_with('-') {
            out.push('-');
        }
    }
    out.trim_end_matches('-').to_string()
}

fn write_json<T: serde::Serialize>(path: &Path, value: &T) -> Result<(), Error> {
    let text = serde_json::to_string_pretty(value).expect("schema serializes");
    fs::write(path, text + "\n")
        .map_err(|e| Error::bad(format!("cannot write {}: {e}", path.display())))
}

pub fn catalog_export(name: &str, dir: &Path) -> Result<Outcome, Error> {
    let entries = default_entries();
    let entry = entries
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::bad(format!("unknown catalog entry `{name}`; see catalog list")))?;
    fs::create_dir_all(dir)
        .map_err(|e| Error::bad(format!("cannot create {}: {e}", dir.display())))?;

    let stem = slug(&entry.name);
    let hopf_file = format!("{stem}.hopf.json");
    write_json(
        &dir.join(&hopf_file),
        &HopfJson::from_data(&entry.hopf, Some(&entry.rmatrix)),
    )?;

    let mut files = vec![hopf_file.clone()];
    let mut carriers = Vec::new();
    for carrier in &entry.carriers {
        let file = format!("{stem}.{}.json", slug(&carrier.name));
        write_json(
            &dir.join(&file),
            &ComoduleJson::with_host_path(&carrier.comodule, &hopf_file),
        )?;
        let known: Vec<String> = carrier
            .known_k
            .iter()
            .map(|k| k.display(&[entry.hopf.algebra(), carrier.comodule.algebra()]))
            .collect();
        carriers.push(json!({ "name": carrier.name, "file": file, "known_k": known }));
        files.push(file);
    }
    let detail = files.clone();
    Ok(Outcome::new(
        true,
        format!("wrote {} files to {}", files.len(), dir.display()),
        json!({
            "name": entry.name,
            "hopf": hopf_file,
            "carriers": carriers,
        }),
    )
    .with_detail(detail))
}
