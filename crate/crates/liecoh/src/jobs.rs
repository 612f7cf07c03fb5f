//! Batch job layer: parse a JSON job description, dispatch to library
//! operations, and render a deterministic JSON report.
//!
//! A job is an object naming a `task` plus task-specific `inputs`:
//!
//! ```json
//! {"task": "cg", "inputs": {"d": 3, "e": 2}}
//! ```
//!
//! The `inputs` wrapper may be omitted, in which case every top-level field
//! other than `task` and `output_path` is treated as an input:
//!
//! ```json
//! {"task": "cg", "d": 3, "e": 2}
//! ```
//!
//! Reports contain only values produced by library calls; the layer adds no
//! computation of its own.  Identical jobs render byte-identical reports.

use serde_json::{json, Map, Value};

use crate::cocycle;
use crate::cohomology::{ext1, h1};
use crate::current::{
    blocks, evaluation_module, kernel_ideals, poly_quotient, tensor_lie, verify_ext_formula,
    CommAlgebra, CurrentAlgebra, PointChar,
};
use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::Matrix;
use crate::quat;
use crate::rep::Representation;
use crate::scalar::Scalar;
use crate::sl2;

/// The operations reachable from the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Task {
    /// Axiom sweep over one or more algebras.
    Check,
    /// Extension-group dimension between two modules.
    Ext,
    /// First cohomology of one module.
    H1,
    /// Block partition of a family of modules.
    Blocks,
    /// Evaluation-kernel ideal chain of a current algebra at a point set.
    StructureKab,
    /// Tensor-product decomposition dimensions for two simple modules.
    Cg,
    /// Full symbolic verification of the quaternion twist data.
    Cocycle,
    /// Canned end-to-end current-algebra scenario.
    DemoTakiff,
}

impl Task {
    pub fn from_name(name: &str) -> Result<Task> {
        match name {
            "check" => Ok(Task::Check),
            "ext" => Ok(Task::Ext),
            "h1" => Ok(Task::H1),
            "blocks" => Ok(Task::Blocks),
            "structureKab" => Ok(Task::StructureKab),
            "cg" => Ok(Task::Cg),
            "cocycle" => Ok(Task::Cocycle),
            "demo-takiff" => Ok(Task::DemoTakiff),
            other => Err(Error::Parse(format!("unknown task {other:?}"))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Task::Check => "check",
            Task::Ext => "ext",
            Task::H1 => "h1",
            Task::Blocks => "blocks",
            Task::StructureKab => "structureKab",
            Task::Cg => "cg",
            Task::Cocycle => "cocycle",
            Task::DemoTakiff => "demo-takiff",
        }
    }
}

/// A parsed job: what to run, on what, and where to put the report.
#[derive(Clone, Debug)]
pub struct Job {
    pub task: Task,
    pub inputs: Value,
    pub output_path: Option<String>,
}

/// Parses a job description, accepting both the wrapped form
/// (`{"task", "inputs", "output_path"}`) and the flattened form where the
/// inputs sit beside `task` at the top level.
pub fn parse_job(text: &str) -> Result<Job> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("invalid job JSON: {e}")))?;
    let obj = value
        .as_object()
        .ok_or_else(|| Error::Parse("job must be a JSON object".into()))?;
    let task_name = obj
        .get("task")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::Parse("job must name a task (string field \"task\")".into()))?;
    let task = Task::from_name(task_name)?;
    let output_path = match obj.get("output_path") {
        None | Some(Value::Null) => None,
        Some(Value::String(p)) => Some(p.clone()),
        Some(_) => return Err(Error::Parse("output_path must be a string".into())),
    };
    let inputs = match obj.get("inputs") {
        Some(v) => {
            if !v.is_object() {
                return Err(Error::Parse("inputs must be an object".into()));
            }
            v.clone()
        }
        None => {
            let mut rest = obj.clone();
            rest.remove("task");
            rest.remove("output_path");
            Value::Object(rest)
        }
    };
    Ok(Job {
        task,
        inputs,
        output_path,
    })
}

/// A finished run: the report to serialize and whether every requested
/// invariant passed (drives the process exit code).
#[derive(Clone, Debug)]
pub struct RunOutcome {
    pub report: Value,
    pub pass: bool,
}

/// Runs a job to completion.
pub fn run(job: &Job) -> Result<RunOutcome> {
    let inputs = job
        .inputs
        .as_object()
        .cloned()
        .unwrap_or_default();
    match job.task {
        Task::Check => run_check(&inputs),
        Task::Ext => run_ext(&inputs),
        Task::H1 => run_h1(&inputs),
        Task::Blocks => run_blocks(&inputs),
        Task::StructureKab => run_structure(&inputs),
        Task::Cg => run_cg(&inputs),
        Task::Cocycle => Ok(run_cocycle()),
        Task::DemoTakiff => run_demo_takiff(),
    }
}

/// Renders a report with sorted object keys and a trailing newline, so two
/// runs of the same job produce byte-identical output.
pub fn render_report(report: &Value) -> String {
    let mut text = serde_json::to_string_pretty(report).expect("report serialization");
    text.push('\n');
    text
}

// ---------------------------------------------------------------------------
// Input parsing helpers
// ---------------------------------------------------------------------------

fn parse_scalar(v: &Value) -> Result<Scalar> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(Scalar::from_int)
            .ok_or_else(|| Error::Parse(format!("non-integral number {n}; write it as a string"))),
        Value::String(s) => s
            .parse::<Scalar>()
            .map_err(|e| Error::Parse(format!("bad scalar {s:?}: {e}"))),
        other => Err(Error::Parse(format!("expected scalar, got {other}"))),
    }
}

fn parse_scalar_vec(v: &Value) -> Result<Vec<Scalar>> {
    v.as_array()
        .ok_or_else(|| Error::Parse("expected an array of scalars".into()))?
        .iter()
        .map(parse_scalar)
        .collect()
}

fn parse_matrix(v: &Value) -> Result<Matrix> {
    let rows = v
        .as_array()
        .ok_or_else(|| Error::Parse("expected a matrix (array of rows)".into()))?
        .iter()
        .map(parse_scalar_vec)
        .collect::<Result<Vec<_>>>()?;
    if rows.is_empty() || rows.iter().any(|r| r.len() != rows[0].len()) {
        return Err(Error::Parse("matrix rows must be non-empty and equal length".into()));
    }
    Ok(Matrix::from_rows(rows))
}

fn get_usize(obj: &Map<String, Value>, key: &str) -> Result<usize> {
    obj.get(key)
        .and_then(Value::as_u64)
        .map(|n| n as usize)
        .ok_or_else(|| Error::Parse(format!("missing or non-integer field {key:?}")))
}

/// An algebra resolved from a job input, with its coefficient-ring context
/// when it is a current algebra (needed to build evaluation modules).
pub struct ParsedAlgebra {
    pub name: String,
    pub lie: LieAlgebra,
    pub current: Option<CurrentAlgebra>,
}

/// The general linear algebra on 2×2 matrices, basis `(E11, E12, E21, E22)`.
pub fn gl2() -> LieAlgebra {
    let b = |coeffs: [i64; 4]| coeffs.iter().map(|&n| Scalar::from_int(n)).collect();
    LieAlgebra::from_brackets(
        4,
        &[
            (0, 1, b([0, 1, 0, 0])),
            (0, 2, b([0, 0, -1, 0])),
            (1, 2, b([1, 0, 0, -1])),
            (1, 3, b([0, 1, 0, 0])),
            (2, 3, b([0, 0, -1, 0])),
        ],
        Some(vec!["E11".into(), "E12".into(), "E21".into(), "E22".into()]),
    )
    .expect("static bracket table")
}

/// The two-dimensional non-abelian solvable algebra `[x, y] = y`.
pub fn solvable2() -> LieAlgebra {
    LieAlgebra::from_brackets(
        2,
        &[(0, 1, vec![Scalar::zero(), Scalar::one()])],
        Some(vec!["x".into(), "y".into()]),
    )
    .expect("static bracket table")
}

/// The abelian algebra of the given dimension.
pub fn abelian(dim: usize) -> LieAlgebra {
    LieAlgebra::from_brackets(dim, &[], None).expect("empty bracket table")
}

fn int_coeffs(coeffs: &[i64]) -> Vec<Scalar> {
    coeffs.iter().map(|&n| Scalar::from_int(n)).collect()
}

/// Truncated polynomial coefficient rings used by the built-in examples.
fn builtin_coeff_ring(name: &str) -> Option<CommAlgebra> {
    let coeffs: &[i64] = match name {
        // k[t]/(t²): dual numbers.
        "takiff-sl2" => &[0, 0, 1],
        // k[t]/(t³).
        "sl2-t3" => &[0, 0, 0, 1],
        // k[t]/(t²−t) ≅ k × k, points t = 0 and t = 1.
        "sl2-kxk" => &[0, -1, 1],
        _ => return None,
    };
    Some(poly_quotient(&int_coeffs(coeffs)).expect("static coefficient ring"))
}

/// Fixed-point subalgebras of sl₂ ⊗ k[t]/(t²−1) under an order-two twist.
fn twisted_fixed_points(mixed: bool) -> LieAlgebra {
    let s = poly_quotient(&int_coeffs(&[-1, 0, 1])).expect("static coefficient ring");
    let cur = tensor_lie(&sl2::algebra(), &s).expect("static current algebra");
    // t ↦ −t on the coefficient ring.
    let sigma_s = Matrix::from_rows(vec![
        vec![Scalar::one(), Scalar::zero()],
        vec![Scalar::zero(), -&Scalar::one()],
    ]);
    let theta_g = if mixed {
        // h ↦ h, e ↦ −e, f ↦ −f on the base algebra.
        Matrix::from_rows(vec![
            vec![Scalar::one(), Scalar::zero(), Scalar::zero()],
            vec![Scalar::zero(), -&Scalar::one(), Scalar::zero()],
            vec![Scalar::zero(), Scalar::zero(), -&Scalar::one()],
        ])
    } else {
        Matrix::identity(3)
    };
    let auto = cur.tensor_automorphism(&theta_g, &sigma_s);
    let (fixed, _) = cur
        .lie()
        .fixed_subalgebra(&[auto])
        .expect("static twist data");
    fixed
}

/// Resolves a named built-in algebra.
pub fn builtin_algebra(name: &str) -> Result<ParsedAlgebra> {
    let (lie, current) = match name {
        "sl2" => (sl2::algebra(), None),
        "gl2" => (gl2(), None),
        "solvable2" => (solvable2(), None),
        "abelian1" => (abelian(1), None),
        "abelian2" => (abelian(2), None),
        "abelian3" => (abelian(3), None),
        "twisted-even" => (twisted_fixed_points(false), None),
        "twisted-mixed" => (twisted_fixed_points(true), None),
        "takiff-sl2" | "sl2-t3" | "sl2-kxk" => {
            let s = builtin_coeff_ring(name).expect("matched above");
            let cur = tensor_lie(&sl2::algebra(), &s)?;
            (cur.lie().clone(), Some(cur))
        }
        other => {
            return Err(Error::Parse(format!(
                "unknown builtin algebra {other:?}; known: sl2, gl2, solvable2, \
                 abelian1..3, twisted-even, twisted-mixed, takiff-sl2, sl2-t3, sl2-kxk"
            )))
        }
    };
    Ok(ParsedAlgebra {
        name: name.to_string(),
        lie,
        current,
    })
}

/// Every built-in algebra, in report order.
pub fn builtin_corpus() -> Vec<ParsedAlgebra> {
    [
        "sl2",
        "gl2",
        "takiff-sl2",
        "sl2-t3",
        "sl2-kxk",
        "twisted-even",
        "twisted-mixed",
        "solvable2",
        "abelian1",
        "abelian2",
        "abelian3",
    ]
    .iter()
    .map(|n| builtin_algebra(n).expect("builtin names resolve"))
    .collect()
}

/// Resolves an algebra input: a builtin name, an explicit bracket table
/// `{"dim", "brackets": [[i, j, [coeffs]], ...], "labels"?}`, or a current
/// algebra `{"current": {"g": <algebra>, "poly": [coeffs]}}`.
pub fn parse_algebra(v: &Value) -> Result<ParsedAlgebra> {
    match v {
        Value::String(name) => builtin_algebra(name),
        Value::Object(obj) => {
            if let Some(cur_spec) = obj.get("current") {
                return parse_current(cur_spec);
            }
            let dim = get_usize(obj, "dim")?;
            let brackets = obj
                .get("brackets")
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Parse("custom algebra needs a \"brackets\" array".into()))?;
            let mut entries = Vec::new();
            for item in brackets {
                let triple = item
                    .as_array()
                    .filter(|t| t.len() == 3)
                    .ok_or_else(|| Error::Parse("bracket entries are [i, j, [coeffs]]".into()))?;
                let i = triple[0]
                    .as_u64()
                    .ok_or_else(|| Error::Parse("bracket index must be an integer".into()))?;
                let j = triple[1]
                    .as_u64()
                    .ok_or_else(|| Error::Parse("bracket index must be an integer".into()))?;
                entries.push((i as usize, j as usize, parse_scalar_vec(&triple[2])?));
            }
            let labels = match obj.get("labels") {
                None => None,
                Some(v) => Some(
                    v.as_array()
                        .ok_or_else(|| Error::Parse("labels must be an array".into()))?
                        .iter()
                        .map(|s| {
                            s.as_str()
                                .map(String::from)
                                .ok_or_else(|| Error::Parse("labels must be strings".into()))
                        })
                        .collect::<Result<Vec<_>>>()?,
                ),
            };
            Ok(ParsedAlgebra {
                name: "custom".into(),
                lie: LieAlgebra::from_brackets(dim, &entries, labels)?,
                current: None,
            })
        }
        other => Err(Error::Parse(format!("cannot read an algebra from {other}"))),
    }
}

fn parse_current(v: &Value) -> Result<ParsedAlgebra> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse("\"current\" must be an object".into()))?;
    let g = match obj.get("g") {
        None => sl2::algebra(),
        Some(spec) => {
            let pa = parse_algebra(spec)?;
            if pa.current.is_some() {
                return Err(Error::Parse("the base of a current algebra must be finite-dimensional, not itself a current algebra".into()));
            }
            pa.lie
        }
    };
    let poly = obj
        .get("poly")
        .ok_or_else(|| Error::Parse("\"current\" needs a \"poly\" coefficient list".into()))?;
    let s = poly_quotient(&parse_scalar_vec(poly)?)?;
    let cur = tensor_lie(&g, &s)?;
    Ok(ParsedAlgebra {
        name: "current".into(),
        lie: cur.lie().clone(),
        current: Some(cur),
    })
}

fn require_current<'a>(pa: &'a ParsedAlgebra, task: &str) -> Result<&'a CurrentAlgebra> {
    pa.current.as_ref().ok_or_else(|| {
        Error::Parse(format!(
            "task {task:?} needs a current algebra (builtin takiff-sl2 / sl2-t3 / sl2-kxk or {{\"current\": ...}})"
        ))
    })
}

fn point_chars(s: &CommAlgebra, values: &[Scalar]) -> Result<Vec<PointChar>> {
    values.iter().map(|v| PointChar::eval_point(s, v)).collect()
}

fn sl2_simple_checked(pa: &ParsedAlgebra, d: usize) -> Result<Representation> {
    let base = pa
        .current
        .as_ref()
        .map(|c| c.g())
        .unwrap_or(&pa.lie);
    if *base != sl2::algebra() {
        return Err(Error::Parse(
            "\"simple\" modules are available when the (base) algebra is sl2".into(),
        ));
    }
    if d == 0 {
        return Err(Error::Parse("simple module dimension must be positive".into()));
    }
    Ok(sl2::simple(d))
}

/// Resolves a module input over a previously parsed algebra.  Accepted
/// forms: `"adjoint"`, `"trivial"`, `{"simple": d}`, `{"onedim": [weights]}`,
/// `{"evaluation": {"points": [...], "simples": [d, ...]}}` (current
/// algebras only), and `{"dim": n, "action": [matrix, ...]}`.
pub fn parse_rep(pa: &ParsedAlgebra, v: &Value) -> Result<Representation> {
    match v {
        Value::String(s) if s == "adjoint" => Ok(Representation::adjoint(&pa.lie)),
        Value::String(s) if s == "trivial" => {
            Representation::one_dim(pa.lie.clone(), &vec![Scalar::zero(); pa.lie.dim()])
        }
        Value::String(other) => Err(Error::Parse(format!(
            "unknown module name {other:?}; known: adjoint, trivial"
        ))),
        Value::Object(obj) => {
            if let Some(d) = obj.get("simple") {
                let d = d
                    .as_u64()
                    .ok_or_else(|| Error::Parse("\"simple\" takes a dimension".into()))?
                    as usize;
                let rep = sl2_simple_checked(pa, d)?;
                if pa.current.is_some() {
                    return Err(Error::Parse(
                        "over a current algebra, wrap simples in an \"evaluation\" module".into(),
                    ));
                }
                return Ok(rep);
            }
            if let Some(w) = obj.get("onedim") {
                return Representation::one_dim(pa.lie.clone(), &parse_scalar_vec(w)?);
            }
            if let Some(ev) = obj.get("evaluation") {
                let cur = require_current(pa, "evaluation module")?;
                let ev = ev
                    .as_object()
                    .ok_or_else(|| Error::Parse("\"evaluation\" must be an object".into()))?;
                let points = point_chars(
                    cur.s(),
                    &parse_scalar_vec(ev.get("points").ok_or_else(|| {
                        Error::Parse("evaluation module needs \"points\"".into())
                    })?)?,
                )?;
                let dims: Vec<usize> = ev
                    .get("simples")
                    .and_then(Value::as_array)
                    .ok_or_else(|| Error::Parse("evaluation module needs \"simples\"".into()))?
                    .iter()
                    .map(|d| {
                        d.as_u64()
                            .map(|n| n as usize)
                            .ok_or_else(|| Error::Parse("simple dimensions are integers".into()))
                    })
                    .collect::<Result<Vec<_>>>()?;
                let reps = dims
                    .iter()
                    .map(|&d| sl2_simple_checked(pa, d))
                    .collect::<Result<Vec<_>>>()?;
                return evaluation_module(cur, &points, &reps);
            }
            if let Some(action) = obj.get("action") {
                let dim = get_usize(obj, "dim")?;
                let matrices = action
                    .as_array()
                    .ok_or_else(|| Error::Parse("\"action\" must be an array of matrices".into()))?
                    .iter()
                    .map(parse_matrix)
                    .collect::<Result<Vec<_>>>()?;
                return Representation::new_with_dim(pa.lie.clone(), dim, matrices);
            }
            Err(Error::Parse(
                "module object needs one of: simple, onedim, evaluation, action".into(),
            ))
        }
        other => Err(Error::Parse(format!("cannot read a module from {other}"))),
    }
}

// ---------------------------------------------------------------------------
// Task handlers
// ---------------------------------------------------------------------------

fn run_check(inputs: &Map<String, Value>) -> Result<RunOutcome> {
    let algebras: Vec<ParsedAlgebra> = match inputs.get("algebras") {
        None => builtin_corpus(),
        Some(list) => list
            .as_array()
            .ok_or_else(|| Error::Parse("\"algebras\" must be an array".into()))?
            .iter()
            .map(parse_algebra)
            .collect::<Result<Vec<_>>>()?,
    };
    let mut entries = Vec::new();
    let mut all_pass = true;
    for pa in &algebras {
        let lie_ok = pa.lie.check_lie();
        let adjoint_ok = match &lie_ok {
            Ok(()) => Representation::adjoint(&pa.lie).check_rep(),
            Err(_) => Ok(()),
        };
        let ok = lie_ok.is_ok() && adjoint_ok.is_ok();
        all_pass &= ok;
        let failure = lie_ok
            .err()
            .or(adjoint_ok.err())
            .map(|e| e.to_string());
        entries.push(json!({
            "name": pa.name,
            "dim": pa.lie.dim(),
            "ok": ok,
            "failure": failure,
        }));
    }
    Ok(RunOutcome {
        report: json!({ "algebras": entries, "all_pass": all_pass }),
        pass: all_pass,
    })
}

fn run_ext(inputs: &Map<String, Value>) -> Result<RunOutcome> {
    let pa = parse_algebra(
        inputs
            .get("algebra")
            .ok_or_else(|| Error::Parse("ext needs an \"algebra\"".into()))?,
    )?;
    let v = parse_rep(
        &pa,
        inputs
            .get("v")
            .ok_or_else(|| Error::Parse("ext needs a module \"v\"".into()))?,
    )?;
    let w = parse_rep(
        &pa,
        inputs
            .get("w")
            .ok_or_else(|| Error::Parse("ext needs a module \"w\"".into()))?,
    )?;
    let ext = ext1(&v, &w);
    Ok(RunOutcome {
        report: json!({
            "ext_dim": ext.dim(),
            "v_dim": v.dim(),
            "w_dim": w.dim(),
        }),
        pass: true,
    })
}

fn run_h1(inputs: &Map<String, Value>) -> Result<RunOutcome> {
    let pa = parse_algebra(
        inputs
            .get("algebra")
            .ok_or_else(|| Error::Parse("h1 needs an \"algebra\"".into()))?,
    )?;
    let v = parse_rep(
        &pa,
        inputs
            .get("module")
            .ok_or_else(|| Error::Parse("h1 needs a \"module\"".into()))?,
    )?;
    let h = h1(&pa.lie, &v);
    Ok(RunOutcome {
        report: json!({
            "derivation_dim": h.derivations().dim(),
            "inner_dim": h.inner().dim(),
            "h1_dim": h.dim(),
        }),
        pass: true,
    })
}

/// Shared by `blocks` and `demo-takiff`: evaluation modules `V(d)` at a
/// point, labeled `V(d)@point`.
fn labeled_evaluation_family(
    cur: &CurrentAlgebra,
    specs: &[(usize, Scalar)],
) -> Result<Vec<(String, Representation)>> {
    let mut family = Vec::new();
    for (d, point) in specs {
        let chi = PointChar::eval_point(cur.s(), point)?;
        let module = evaluation_module(cur, &[chi], &[sl2::simple(*d)])?;
        family.push((format!("V({d})@{point}"), module));
    }
    Ok(family)
}

fn run_blocks(inputs: &Map<String, Value>) -> Result<RunOutcome> {
    let pa = parse_algebra(
        inputs
            .get("algebra")
            .ok_or_else(|| Error::Parse("blocks needs an \"algebra\"".into()))?,
    )?;
    let cur = require_current(&pa, "blocks")?;
    if *cur.g() != sl2::algebra() {
        return Err(Error::Parse("blocks expects an sl2 base algebra".into()));
    }
    let specs = inputs
        .get("simples")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("blocks needs a \"simples\" array".into()))?
        .iter()
        .map(|item| {
            let obj = item
                .as_object()
                .ok_or_else(|| Error::Parse("each simple is {\"d\", \"point\"}".into()))?;
            let d = get_usize(obj, "d")?;
            let point = parse_scalar(
                obj.get("point")
                    .ok_or_else(|| Error::Parse("each simple needs a \"point\"".into()))?,
            )?;
            Ok((d, point))
        })
        .collect::<Result<Vec<_>>>()?;
    let family = labeled_evaluation_family(cur, &specs)?;
    let partition = blocks(&family)?;
    let witnesses: Vec<Value> = partition
        .witnesses()
        .iter()
        .map(|w| json!({ "from": w.from, "to": w.to, "ext_dim": w.ext_dim }))
        .collect();
    Ok(RunOutcome {
        report: json!({
            "blocks": partition.blocks(),
            "witnesses": witnesses,
        }),
        pass: true,
    })
}

fn run_structure(inputs: &Map<String, Value>) -> Result<RunOutcome> {
    let pa = parse_algebra(
        inputs
            .get("algebra")
            .ok_or_else(|| Error::Parse("structureKab needs an \"algebra\"".into()))?,
    )?;
    let cur = require_current(&pa, "structureKab")?;
    let points = point_chars(
        cur.s(),
        &parse_scalar_vec(
            inputs
                .get("points")
                .ok_or_else(|| Error::Parse("structureKab needs \"points\"".into()))?,
        )?,
    )?;
    let autos = match inputs.get("autos") {
        None => Vec::new(),
        Some(list) => list
            .as_array()
            .ok_or_else(|| Error::Parse("\"autos\" must be an array of matrices".into()))?
            .iter()
            .map(parse_matrix)
            .collect::<Result<Vec<_>>>()?,
    };
    let ki = kernel_ideals(cur, &points, &autos)?;
    Ok(RunOutcome {
        report: json!({
            "total_dim": cur.lie().dim(),
            "quotient_dim": ki.quotient.dim(),
            "k_dim": ki.k.dim(),
            "k_prime_dim": ki.k_prime.dim(),
            "n_dim": ki.n.dim(),
            "n_mod_kprime_dim": ki.n_mod_kprime.dim(),
            "k_mod_n_dim": ki.k_mod_n.dim(),
            "vanishing_ideal_dim": ki.vanishing_ideal.dim(),
            "fixed_vanishing_ideal_dim": ki.fixed_vanishing_ideal.dim(),
        }),
        pass: true,
    })
}

fn run_cg(inputs: &Map<String, Value>) -> Result<RunOutcome> {
    let d = get_usize(inputs, "d")?;
    let e = get_usize(inputs, "e")?;
    let dims = sl2::clebsch_gordan(d, e)?;
    Ok(RunOutcome {
        report: json!({ "dims": dims }),
        pass: true,
    })
}

fn run_cocycle() -> RunOutcome {
    let relations = quat::verify_quaternion_relations();
    let brackets = quat::verify_l1_brackets();
    let idempotents = quat::verify_idempotents();
    let section = quat::verify_f_section();
    let corner = quat::verify_corner_closure();
    let embedding = cocycle::verify_phi_brackets();
    let cocycle_report = cocycle::verify_cocycle_condition();
    let pass = relations.all_pass
        && brackets.all_pass
        && idempotents.all_pass
        && section.all_pass
        && corner.all_pass
        && embedding.all_pass
        && cocycle_report.all_pass;
    let to_value = |r: &quat::SymbolicReport| serde_json::to_value(r).expect("report serializes");
    RunOutcome {
        report: json!({
            "quaternion_relations": to_value(&relations),
            "bracket_identities": to_value(&brackets),
            "idempotents": to_value(&idempotents),
            "section_retraction": to_value(&section),
            "corner_closure": to_value(&corner),
            "embedding_brackets": to_value(&embedding),
            "cocycle": serde_json::to_value(&cocycle_report).expect("report serializes"),
            "all_pass": pass,
        }),
        pass,
    }
}

fn run_demo_takiff() -> Result<RunOutcome> {
    let pa = builtin_algebra("takiff-sl2")?;
    let cur = require_current(&pa, "demo-takiff")?;
    let zero = Scalar::zero();
    let chi = PointChar::eval_point(cur.s(), &zero)?;

    let ki = kernel_ideals(cur, std::slice::from_ref(&chi), &[])?;
    let structure = json!({
        "total_dim": cur.lie().dim(),
        "quotient_dim": ki.quotient.dim(),
        "k_dim": ki.k.dim(),
        "k_prime_dim": ki.k_prime.dim(),
        "n_dim": ki.n.dim(),
        "n_mod_kprime_dim": ki.n_mod_kprime.dim(),
        "k_mod_n_dim": ki.k_mod_n.dim(),
    });

    let mut formula = Vec::new();
    let mut all_agree = true;
    for (d, e) in [(1, 1), (1, 3), (2, 2), (2, 4)] {
        let report = verify_ext_formula(cur, &chi, &sl2::simple(d), &sl2::simple(e))?;
        all_agree &= report.agrees;
        formula.push(json!({
            "v": d,
            "w": e,
            "generic_dim": report.generic_dim,
            "hom_formula_dim": report.hom_formula_dim,
            "k_mod_n_dim": report.k_mod_n_dim,
            "modules_isomorphic": report.modules_isomorphic,
            "predicted_dim": report.predicted_dim,
            "agrees": report.agrees,
        }));
    }

    let specs: Vec<(usize, Scalar)> = (1..=6).map(|d| (d, Scalar::zero())).collect();
    let family = labeled_evaluation_family(cur, &specs)?;
    let partition = blocks(&family)?;
    let witnesses: Vec<Value> = partition
        .witnesses()
        .iter()
        .map(|w| json!({ "from": w.from, "to": w.to, "ext_dim": w.ext_dim }))
        .collect();

    Ok(RunOutcome {
        report: json!({
            "structure": structure,
            "ext_formula": formula,
            "blocks": partition.blocks(),
            "witnesses": witnesses,
            "all_pass": all_agree,
        }),
        pass: all_agree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_text(text: &str) -> RunOutcome {
        run(&parse_job(text).unwrap()).unwrap()
    }

    #[test]
    fn both_job_forms_parse_identically() {
        let wrapped = parse_job(r#"{"task":"cg","inputs":{"d":3,"e":2}}"#).unwrap();
        let flat = parse_job(r#"{"task":"cg","d":3,"e":2}"#).unwrap();
        assert_eq!(wrapped.task, Task::Cg);
        assert_eq!(wrapped.inputs, flat.inputs);
    }

    #[test]
    fn unknown_task_is_a_parse_error() {
        let err = parse_job(r#"{"task":"frobnicate"}"#).unwrap_err();
        assert!(matches!(err, Error::Parse(_)));
    }

    #[test]
    fn cg_job_matches_the_documented_example() {
        let out = run_text(r#"{"task":"cg","inputs":{"d":3,"e":2}}"#);
        assert_eq!(out.report, json!({ "dims": [2, 4] }));
        assert!(out.pass);
    }

    #[test]
    fn check_sweeps_the_builtin_corpus() {
        let out = run_text(r#"{"task":"check"}"#);
        assert!(out.pass);
        let entries = out.report["algebras"].as_array().unwrap();
        assert_eq!(entries.len(), builtin_corpus().len());
        assert!(entries.iter().all(|e| e["ok"].as_bool().unwrap()));
    }

    #[test]
    fn check_reports_a_bad_bracket_table() {
        // [x,y] = z, [x,z] = z, [y,z] = y: the Jacobi cyclic sum on (x,y,z)
        // is y − z ≠ 0.
        let job = r#"{"task":"check","algebras":[
            {"dim":3,"brackets":[[0,1,[0,0,1]],[0,2,[0,0,1]],[1,2,[0,1,0]]]}
        ]}"#;
        let out = run_text(job);
        assert!(!out.pass);
        assert!(out.report["algebras"][0]["failure"].is_string());
    }

    #[test]
    fn ext_between_sl2_simples_vanishes() {
        let out = run_text(r#"{"task":"ext","algebra":"sl2","v":{"simple":2},"w":{"simple":3}}"#);
        assert_eq!(out.report["ext_dim"], 0);
    }

    #[test]
    fn ext_between_takiff_evaluations() {
        let job = r#"{"task":"ext","algebra":"takiff-sl2",
            "v":{"evaluation":{"points":[0],"simples":[2]}},
            "w":{"evaluation":{"points":[0],"simples":[2]}}}"#;
        let out = run_text(job);
        assert_eq!(out.report["ext_dim"], 1);
    }

    #[test]
    fn h1_of_the_trivial_module_counts_outer_derivations() {
        let out = run_text(r#"{"task":"h1","algebra":"abelian2","module":"trivial"}"#);
        assert_eq!(out.report["h1_dim"], 2);
        assert_eq!(out.report["inner_dim"], 0);
    }

    #[test]
    fn structure_job_reports_the_ideal_chain() {
        let out = run_text(r#"{"task":"structureKab","algebra":"takiff-sl2","points":[0]}"#);
        assert_eq!(out.report["k_dim"], 3);
        assert_eq!(out.report["k_prime_dim"], 0);
        assert_eq!(out.report["n_dim"], 3);
        assert_eq!(out.report["n_mod_kprime_dim"], 3);
        assert_eq!(out.report["k_mod_n_dim"], 0);
    }

    #[test]
    fn blocks_job_splits_takiff_by_parity() {
        let job = r#"{"task":"blocks","algebra":"takiff-sl2","simples":[
            {"d":1,"point":0},{"d":2,"point":0},{"d":3,"point":0},
            {"d":4,"point":0},{"d":5,"point":0},{"d":6,"point":0}
        ]}"#;
        let out = run_text(job);
        assert_eq!(
            out.report["blocks"],
            json!([
                ["V(1)@0", "V(3)@0", "V(5)@0"],
                ["V(2)@0", "V(4)@0", "V(6)@0"]
            ])
        );
    }

    #[test]
    fn cocycle_job_passes_every_identity() {
        let out = run_text(r#"{"task":"cocycle"}"#);
        assert!(out.pass);
        assert_eq!(out.report["all_pass"], json!(true));
        assert_eq!(out.report["cocycle"]["matrices"].as_array().unwrap().len(), 4);
    }

    #[test]
    fn demo_takiff_reproduces_the_parity_blocks() {
        let out = run_text(r#"{"task":"demo-takiff"}"#);
        assert!(out.pass);
        assert_eq!(
            out.report["blocks"],
            json!([
                ["V(1)@0", "V(3)@0", "V(5)@0"],
                ["V(2)@0", "V(4)@0", "V(6)@0"]
            ])
        );
        assert_eq!(out.report["structure"]["k_dim"], 3);
    }

    #[test]
    fn rendering_is_stable() {
        let out1 = run_text(r#"{"task":"cg","inputs":{"d":4,"e":4}}"#);
        let out2 = run_text(r#"{"task":"cg","inputs":{"d":4,"e":4}}"#);
        assert_eq!(render_report(&out1.report), render_report(&out2.report));
        assert!(render_report(&out1.report).ends_with('\n'));
    }

    #[test]
    fn output_path_round_trips() {
        let job = parse_job(r#"{"task":"cg","inputs":{"d":2,"e":2},"output_path":"/tmp/x.json"}"#)
            .unwrap();
        assert_eq!(job.output_path.as_deref(), Some("/tmp/x.json"));
    }

    #[test]
    fn custom_algebra_with_action_matrices() {
        // One-dimensional algebra acting on k² by a nilpotent Jordan block:
        // derivations are all of Hom(k², k²), inner ones are the image of
        // ad (codimension = the commutant, dim 2), so ext has dimension 2.
        let job = r#"{"task":"ext","algebra":{"dim":1,"brackets":[]},
            "v":{"dim":2,"action":[[[0,1],[0,0]]]},
            "w":{"dim":2,"action":[[[0,1],[0,0]]]}}"#;
        let out = run_text(job);
        assert_eq!(out.report["ext_dim"], 2);
    }
}
