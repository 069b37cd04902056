//! JSON interchange and the subcommands behind the `leibniz` binary.
//!
//! Commands return a [`CmdOutput`] instead of printing, so they can be driven
//! in-process. Exit codes: 0 success, 1 semantic failure, 2 I/O or format error.

use std::path::Path;

use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::LeibnizAlgebra;
use crate::autos::{exp_ad, extendable, factor_semidirect, is_automorphism};
use crate::catalog::{self, sl3_transpose, BuildParams, CatalogPayload};
use crate::deriv::{derivation_space, formula_report_with, split_derivations, FormulaReport};
use crate::exactla::{parse_rational, unit, RatMatrix, Rational};
use crate::repr::ModuleRep;
use crate::structure::{levi_lift, structure_graph_with, summands_from_graph};
use crate::{Error, Result};

/// The on-disk form of an algebra: `c_{ij}^k` listed as `[i, j, k, "p/q"]`.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraFile {
    pub dim: usize,
    pub labels: Vec<String>,
    pub brackets: Vec<(usize, usize, usize, Rational)>,
    pub meta: Option<Value>,
}

fn format_err(msg: impl Into<String>) -> Error {
    Error::Format(msg.into())
}

/// Reads a rational from a JSON string `"p/q"` or an integer.
pub fn rational_from_json(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => {
            parse_rational(s).ok_or_else(|| format_err(format!("bad rational '{s}'")))
        }
        Value::Number(n) => n
            .as_i64()
            .map(crate::exactla::int)
            .ok_or_else(|| format_err(format!("non-integer number {n}; use a \"p/q\" string"))),
        other => Err(format_err(format!("expected a rational, found {other}"))),
    }
}

fn rational_to_json(q: &Rational) -> Value {
    Value::String(q.to_string())
}

pub fn matrix_to_json(m: &RatMatrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|r| Value::Array(m.row(r).iter().map(rational_to_json).collect()))
            .collect(),
    )
}

/// A matrix given as an array of rows, or as `{"matrix": rows}`.
pub fn matrix_from_json(v: &Value) -> Result<RatMatrix> {
    let rows = match v {
        Value::Object(o) => o
            .get("matrix")
            .ok_or_else(|| format_err("missing \"matrix\""))?,
        other => other,
    };
    let rows = rows
        .as_array()
        .ok_or_else(|| format_err("matrix must be an array of rows"))?;
    let parsed: Vec<Vec<Rational>> = rows
        .iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| format_err("matrix row must be an array"))?
                .iter()
                .map(rational_from_json)
                .collect()
        })
        .collect::<Result<_>>()?;
    let cols = parsed.first().map_or(0, Vec::len);
    if parsed.iter().any(|r| r.len() != cols) {
        return Err(format_err("matrix rows have different lengths"));
    }
    Ok(RatMatrix::from_rows(cols, &parsed))
}

fn index_from_json(v: &Value, dim: usize) -> Result<usize> {
    let i = v
        .as_u64()
        .ok_or_else(|| format_err(format!("bad index {v}")))? as usize;
    if i >= dim {
        return Err(format_err(format!(
            "index {i} out of range for dimension {dim}"
        )));
    }
    Ok(i)
}

impl AlgebraFile {
    pub fn from_algebra(l: &LeibnizAlgebra, meta: Option<Value>) -> Self {
        AlgebraFile {
            dim: l.dim(),
            labels: l.labels().to_vec(),
            brackets: l
                .nonzero_constants()
                .map(|(i, j, k, c)| (i, j, k, c.clone()))
                .collect(),
            meta,
        }
    }

    pub fn to_algebra(&self) -> Result<LeibnizAlgebra> {
        LeibnizAlgebra::from_brackets(self.labels.clone(), &self.brackets)
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let o = v
            .as_object()
            .ok_or_else(|| format_err("algebra file must be a JSON object"))?;
        let dim = o
            .get("dim")
            .and_then(Value::as_u64)
            .ok_or_else(|| format_err("missing or invalid \"dim\""))? as usize;
        let labels: Vec<String> = match o.get("labels") {
            None => (0..dim).map(|i| format!("b{i}")).collect(),
            Some(Value::Array(a)) => a
                .iter()
                .map(|x| {
                    x.as_str()
                        .map(str::to_string)
                        .ok_or_else(|| format_err("labels must be strings"))
                })
                .collect::<Result<_>>()?,
            Some(_) => return Err(format_err("\"labels\" must be an array")),
        };
        if labels.len() != dim {
            return Err(format_err(format!(
                "{} labels for dimension {dim}",
                labels.len()
            )));
        }
        let raw = o
            .get("brackets")
            .and_then(Value::as_array)
            .ok_or_else(|| format_err("missing \"brackets\" array"))?;
        let mut seen = std::collections::BTreeSet::new();
        let mut brackets = Vec::with_capacity(raw.len());
        for entry in raw {
            let e = entry
                .as_array()
                .filter(|e| e.len() == 4)
                .ok_or_else(|| format_err(format!("bracket entry {entry} is not [i, j, k, c]")))?;
            let (i, j, k) = (
                index_from_json(&e[0], dim)?,
                index_from_json(&e[1], dim)?,
                index_from_json(&e[2], dim)?,
            );
            if !seen.insert((i, j, k)) {
                return Err(format_err(format!("constant ({i}, {j}, {k}) listed twice")));
            }
            brackets.push((i, j, k, rational_from_json(&e[3])?));
        }
        brackets.sort_by_key(|&(i, j, k, _)| (i, j, k));
        Ok(AlgebraFile {
            dim,
            labels,
            brackets,
            meta: o.get("meta").cloned(),
        })
    }

    pub fn to_json(&self) -> Value {
        let brackets: Vec<Value> = self
            .brackets
            .iter()
            .filter(|(.., c)| !num_traits::Zero::is_zero(c))
            .map(|(i, j, k, c)| json!([i, j, k, rational_to_json(c)]))
            .collect();
        let mut v = json!({
            "dim": self.dim,
            "labels": self.labels,
            "brackets": brackets,
        });
        if let Some(m) = &self.meta {
            v["meta"] = m.clone();
        }
        v
    }

    pub fn parse(text: &str) -> Result<Self> {
        let v: Value =
            serde_json::from_str(text).map_err(|e| format_err(format!("invalid JSON: {e}")))?;
        Self::from_json(&v)
    }

    pub fn to_json_string(&self) -> String {
        to_pretty(&self.to_json())
    }
}

/// Pretty JSON with a trailing newline. Object keys come out sorted.
pub fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

pub fn read_algebra(path: &Path) -> Result<LeibnizAlgebra> {
    let text = std::fs::read_to_string(path)?;
    AlgebraFile::parse(&text)?.to_algebra()
}

pub fn read_matrix(path: &Path) -> Result<RatMatrix> {
    let text = std::fs::read_to_string(path)?;
    let v: Value =
        serde_json::from_str(&text).map_err(|e| format_err(format!("invalid JSON: {e}")))?;
    matrix_from_json(&v)
}

/// A module payload: the acting algebra plus one action matrix per basis element.
pub fn module_to_json(m: &ModuleRep, meta: Option<Value>) -> Value {
    let mut v = json!({
        "kind": "module",
        "algebra": AlgebraFile::from_algebra(m.lie(), None).to_json(),
        "dim": m.mdim(),
        "labels": m.labels(),
        "action": m.action().iter().map(matrix_to_json).collect::<Vec<_>>(),
    });
    if let Some(meta) = meta {
        v["meta"] = meta;
    }
    v
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct IsotypicEntry {
    pub dim: usize,
    pub multiplicity: usize,
    pub irreducible_dim: usize,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct SummandEntry {
    pub s_dim: usize,
    pub i_dim: usize,
    pub action_surjective: bool,
    pub connected: bool,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct SplitEntry {
    pub r_s: usize,
    pub der_si: usize,
    pub der_ii: usize,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct FormulaEntry {
    pub brute_dim: usize,
    pub dim_s: usize,
    pub hom_dim: usize,
    pub end_dim: usize,
    pub structural_dim: usize,
    pub r: usize,
    pub s: usize,
    pub n: Vec<usize>,
    pub m: Vec<usize>,
    pub formula_dim: usize,
    pub per_ideal_m: Vec<usize>,
    pub per_ideal_formula_dim: usize,
    pub all_n_one: bool,
}

impl From<&FormulaReport> for FormulaEntry {
    fn from(r: &FormulaReport) -> Self {
        FormulaEntry {
            brute_dim: r.brute_dim,
            dim_s: r.dim_s,
            hom_dim: r.hom_dim,
            end_dim: r.end_dim,
            structural_dim: r.structural_dim,
            r: r.r,
            s: r.s,
            n: r.n.clone(),
            m: r.m.clone(),
            formula_dim: r.formula_dim,
            per_ideal_m: r.per_ideal_m.clone(),
            per_ideal_formula_dim: r.per_ideal_formula_dim,
            all_n_one: r.all_n_one(),
        }
    }
}

/// Everything `analyze` reports. Fields that need a stage that failed are `null`,
/// and the failure is listed under `warnings`.
#[derive(Debug, Clone, Serialize, PartialEq, Eq, Default)]
#[allow(non_snake_case)]
pub struct AnalysisReport {
    pub dim: usize,
    pub leibniz_ok: bool,
    pub is_lie: bool,
    pub dim_I: Option<usize>,
    pub semisimple: Option<bool>,
    pub levi_found: bool,
    pub simple_ideal_dims: Option<Vec<usize>>,
    pub isotypic: Option<Vec<IsotypicEntry>>,
    pub graph_edges: Option<Vec<(usize, usize)>>,
    pub summand_count: Option<usize>,
    pub summands: Option<Vec<SummandEntry>>,
    pub der_dim: Option<usize>,
    pub der_split: Option<SplitEntry>,
    pub formula: Option<FormulaEntry>,
    pub prop_2_10_ok: Option<bool>,
    pub warnings: Vec<String>,
}

impl AnalysisReport {
    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("serializable")
    }
}

/// Runs every analysis stage that applies. Only structural failures of the input
/// (not a Leibniz algebra) stop early; later failures become warnings.
pub fn analyze(l: &LeibnizAlgebra) -> AnalysisReport {
    let mut r = AnalysisReport {
        dim: l.dim(),
        leibniz_ok: l.is_leibniz(),
        is_lie: l.is_lie(),
        ..Default::default()
    };
    if !r.leibniz_ok {
        r.warnings
            .push("Leibniz identity fails; nothing else computed".into());
        return r;
    }
    let der = derivation_space(l);
    r.der_dim = Some(der.dim());
    match l.squares_ideal() {
        Ok(i) => r.dim_I = Some(i.dim()),
        Err(e) => {
            r.warnings.push(e.to_string());
            return r;
        }
    }
    match l.is_semisimple_liezation() {
        Ok(s) => r.semisimple = Some(s),
        Err(e) => r.warnings.push(e.to_string()),
    }
    if r.semisimple != Some(true) {
        r.warnings
            .push("liezation is not semisimple; structure analysis skipped".into());
        return r;
    }
    let levi = match levi_lift(l) {
        Ok(levi) => levi,
        Err(e) => {
            r.warnings.push(format!("Levi lift: {e}"));
            return r;
        }
    };
    r.levi_found = true;
    r.prop_2_10_ok = Some(crate::structure::ideal_action_surjective(l, &levi));
    match split_derivations(l, &der, &levi) {
        Ok(d) => {
            let (a, b, c) = d.split.expect("populated").dims();
            r.der_split = Some(SplitEntry {
                r_s: a,
                der_si: b,
                der_ii: c,
            });
        }
        Err(e) => r.warnings.push(e.to_string()),
    }
    match formula_report_with(l, &levi, der.dim()) {
        Ok(f) => r.formula = Some(FormulaEntry::from(&f)),
        Err(e) => r.warnings.push(format!("formula report: {e}")),
    }
    let graph = match structure_graph_with(l, levi) {
        Ok(g) => g,
        Err(e) => {
            r.warnings.push(format!("structure graph: {e}"));
            return r;
        }
    };
    r.simple_ideal_dims = Some(graph.nodes.iter().map(|s| s.dim()).collect());
    r.isotypic = Some(
        graph
            .components
            .iter()
            .map(|c| IsotypicEntry {
                dim: c.space.dim(),
                multiplicity: c.multiplicity,
                irreducible_dim: c.irreducible_dim,
            })
            .collect(),
    );
    r.graph_edges = Some(graph.edges.clone());
    match summands_from_graph(l, &graph) {
        Ok(d) => {
            r.summand_count = Some(d.count());
            r.summands = Some(
                d.summands
                    .iter()
                    .map(|s| SummandEntry {
                        s_dim: s.s_part.dim(),
                        i_dim: s.i_part.dim(),
                        action_surjective: s.action_surjective,
                        connected: s.connected,
                    })
                    .collect(),
            );
            r.warnings.extend(d.warnings);
        }
        Err(e) => r.warnings.push(format!("summands: {e}")),
    }
    r
}

/// Captured result of one command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CmdOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CmdOutput {
    fn ok(stdout: String) -> Self {
        CmdOutput {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, stdout: String, stderr: String) -> Self {
        CmdOutput {
            code,
            stdout,
            stderr,
        }
    }

    fn from_error(e: &Error) -> Self {
        let code = match e {
            Error::Io(_) | Error::Format(_) => 2,
            _ => 1,
        };
        CmdOutput::fail(code, String::new(), format!("error: {e}\n"))
    }
}

fn run(f: impl FnOnce() -> Result<CmdOutput>) -> CmdOutput {
    f().unwrap_or_else(|e| CmdOutput::from_error(&e))
}

pub fn cmd_verify(path: &Path) -> CmdOutput {
    run(|| {
        let l = read_algebra(path)?;
        let defects = l.leibniz_defects();
        if defects.is_empty() {
            return Ok(CmdOutput::ok(format!(
                "ok: dimension {}, no Leibniz defects\n",
                l.dim()
            )));
        }
        let mut out = String::new();
        for d in &defects {
            let v: Vec<String> = d.defect.iter().map(ToString::to_string).collect();
            out.push_str(&format!(
                "defect ({}, {}, {}): [{}]\n",
                d.i,
                d.j,
                d.k,
                v.join(", ")
            ));
        }
        Ok(CmdOutput::fail(
            1,
            out,
            format!("{} Leibniz defects\n", defects.len()),
        ))
    })
}

pub fn cmd_analyze(path: &Path) -> CmdOutput {
    run(|| {
        let l = read_algebra(path)?;
        let report = analyze(&l);
        let text = to_pretty(&report.to_json());
        Ok(if report.leibniz_ok {
            CmdOutput::ok(text)
        } else {
            CmdOutput::fail(1, text, "input fails the Leibniz identity\n".into())
        })
    })
}

pub fn cmd_derivations(path: &Path) -> CmdOutput {
    run(|| {
        let l = read_algebra(path)?;
        if !l.is_leibniz() {
            return Err(Error::Axiom("input fails the Leibniz identity".into()));
        }
        let der = derivation_space(&l);
        let mut warnings = Vec::new();
        let mut out = json!({
            "der_dim": der.dim(),
            "basis": der.basis.iter().map(matrix_to_json).collect::<Vec<_>>(),
            "split": null,
            "formula": null,
        });
        match levi_lift(&l) {
            Ok(levi) => {
                match split_derivations(&l, &der, &levi) {
                    Ok(d) => {
                        let s = d.split.expect("populated");
                        let mats =
                            |v: &[RatMatrix]| v.iter().map(matrix_to_json).collect::<Vec<_>>();
                        out["split"] = json!({
                            "dims": [s.r_s.len(), s.der_si.len(), s.der_ii.len()],
                            "r_s": mats(&s.r_s),
                            "der_si": mats(&s.der_si),
                            "der_ii": mats(&s.der_ii),
                        });
                    }
                    Err(e) => warnings.push(e.to_string()),
                }
                match formula_report_with(&l, &levi, der.dim()) {
                    Ok(f) => {
                        out["formula"] =
                            serde_json::to_value(FormulaEntry::from(&f)).expect("serializable")
                    }
                    Err(e) => warnings.push(e.to_string()),
                }
            }
            Err(e) => warnings.push(format!("no Levi decomposition: {e}")),
        }
        out["warnings"] = json!(warnings);
        Ok(CmdOutput::ok(to_pretty(&out)))
    })
}

/// What `automorphisms` should do with its argument.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AutoMode {
    /// Test a matrix (file path) for being an automorphism.
    Check(String),
    /// Factor an automorphism (file path) as `ψ ∘ η`.
    Factor(String),
    /// Test whether an automorphism of `S` extends: `identity`, `sl3-transpose`,
    /// `exp-ad:K` or a matrix file in the coordinates of the Levi factor.
    Extend(String),
}

fn named_s_automorphism(name: &str, s: &LeibnizAlgebra) -> Result<RatMatrix> {
    let g = s.dim();
    if name == "identity" {
        return Ok(RatMatrix::identity(g));
    }
    if name == "sl3-transpose" {
        if g != 8 || *s != catalog::sl3() {
            return Err(Error::Format(
                "sl3-transpose needs a Levi factor equal to sl3 in the standard basis".into(),
            ));
        }
        return Ok(sl3_transpose());
    }
    if let Some(k) = name.strip_prefix("exp-ad:") {
        let k: usize = k
            .parse()
            .map_err(|_| format_err(format!("bad basis index in '{name}'")))?;
        if k >= g {
            return Err(format_err(format!(
                "basis index {k} out of range for a {g}-dimensional Levi factor"
            )));
        }
        return exp_ad(s, &unit(g, k));
    }
    read_matrix(Path::new(name))
}

pub fn cmd_automorphisms(path: &Path, mode: &AutoMode) -> CmdOutput {
    run(|| {
        let l = read_algebra(path)?;
        if !l.is_leibniz() {
            return Err(Error::Axiom("input fails the Leibniz identity".into()));
        }
        match mode {
            AutoMode::Check(m) => {
                let m = read_matrix(Path::new(m))?;
                let ok = is_automorphism(&l, &m);
                let text = to_pretty(&json!({ "automorphism": ok }));
                Ok(if ok {
                    CmdOutput::ok(text)
                } else {
                    CmdOutput::fail(1, text, "not an automorphism\n".into())
                })
            }
            AutoMode::Factor(m) => {
                let m = read_matrix(Path::new(m))?;
                let levi = levi_lift(&l)?;
                let (psi, eta) = factor_semidirect(&l, &m, &levi)?;
                Ok(CmdOutput::ok(to_pretty(&json!({
                    "psi": matrix_to_json(&psi.matrix),
                    "eta": matrix_to_json(&eta.matrix),
                }))))
            }
            AutoMode::Extend(name) => {
                let levi = levi_lift(&l)?;
                let sigma = named_s_automorphism(name, &levi.s_algebra)?;
                let imod = levi.i_module(&l)?;
                let ok = extendable(&sigma, &imod)?;
                let verdict = if ok { "extendable" } else { "not extendable" };
                Ok(CmdOutput::ok(to_pretty(&json!({
                    "automorphism": name,
                    "extendable": ok,
                    "verdict": verdict,
                }))))
            }
        }
    })
}

/// Emits a catalog entry: an algebra file, or a module file for module entries.
pub fn cmd_build(name: &str, params: &BuildParams) -> CmdOutput {
    run(|| {
        let entry = catalog::build(name, params)?;
        let meta = json!({ "name": entry.name, "provenance": entry.provenance });
        let v = match &entry.payload {
            CatalogPayload::Algebra(a) => AlgebraFile::from_algebra(a, Some(meta)).to_json(),
            CatalogPayload::Module(m) => module_to_json(m, Some(meta)),
        };
        Ok(CmdOutput::ok(to_pretty(&v)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::example_2_11;

    #[test]
    fn round_trip() {
        let l = example_2_11();
        let f = AlgebraFile::from_algebra(&l, None);
        let back = AlgebraFile::parse(&f.to_json_string()).unwrap();
        assert_eq!(back.to_algebra().unwrap(), l);
    }

    #[test]
    fn integers_and_fractions() {
        let f =
            AlgebraFile::parse(r#"{"dim":1,"labels":["a"],"brackets":[[0,0,0,"-3/6"]]}"#).unwrap();
        assert_eq!(f.brackets[0].3, crate::exactla::frac(-1, 2));
        let g = AlgebraFile::parse(r#"{"dim":1,"labels":["a"],"brackets":[[0,0,0,2]]}"#).unwrap();
        assert_eq!(g.brackets[0].3, crate::exactla::int(2));
        assert!(AlgebraFile::parse(r#"{"dim":1,"labels":["a"],"brackets":[[0,1,0,2]]}"#).is_err());
        assert!(
            AlgebraFile::parse(r#"{"dim":1,"labels":["a"],"brackets":[[0,0,0,"1/0"]]}"#).is_err()
        );
        assert!(AlgebraFile::parse("{").is_err());
    }

    #[test]
    fn report_ten_dimensional() {
        let r = analyze(&example_2_11());
        assert_eq!(r.dim_I, Some(4));
        assert_eq!(r.summand_count, Some(1));
        assert_eq!(r.der_dim, Some(7));
        assert!(r.warnings.is_empty(), "{:?}", r.warnings);
    }

    #[test]
    fn abelian_report_is_not_semisimple() {
        let r = analyze(&LeibnizAlgebra::abelian(2));
        assert_eq!(r.semisimple, Some(false));
        assert!(!r.levi_found);
    }
}
