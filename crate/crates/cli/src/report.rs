//! Serialized output. Rationals always appear as `"p/q"` strings.

use std::fmt::Write as _;

use grif_core::exact::{format_rational, Rational};
use grif_core::griffiths::GriffithsReport;
use grif_core::repweights::WeightSystem;
use grif_core::rootdata::RootSystem;
use grif_core::sweep::{CheckSummary, Failure};
use grif_core::table1::{FamilyResult, RowValues};
use serde::Serialize;

pub const TABLE1_SCHEMA: &str = "grif.table1/1";
pub const REPORT_SCHEMA: &str = "grif.report/1";
pub const CHECK_SCHEMA: &str = "grif.check/1";
pub const PCLOSE_SCHEMA: &str = "grif.pclose/1";

const GAMMA_NOTE: &str = "not independently computed";

pub fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("plain data serializes")
}

fn rats(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

fn cell(s: &str) -> &str {
    if s.is_empty() {
        "-"
    } else {
        s
    }
}

fn opt_cell(v: Option<i64>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

pub fn table1_tsv(rows: &[FamilyResult], instances: bool) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "type\th\tgamma ({GAMMA_NOTE})\tS(simply-laced)\tS(short coroot)\tS(long coroot)\tstatus\n"
    ));
    for row in rows {
        let f = &row.formulas;
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}",
            f.label,
            f.coxeter,
            f.gamma,
            cell(f.s_simply_laced),
            cell(f.s_short_coroot),
            cell(f.s_long_coroot),
            if row.ok() { "ok" } else { "MISMATCH" }
        );
        if instances {
            for inst in &row.instances {
                let c = &inst.computed;
                let _ = writeln!(
                    out,
                    "  {}\t{}\t{}\t{}\t{}\t{}\t{}",
                    inst.spec,
                    c.coxeter,
                    c.gamma,
                    opt_cell(c.s_simply_laced),
                    opt_cell(c.s_short_coroot),
                    opt_cell(c.s_long_coroot),
                    if inst.ok() { "ok" } else { "MISMATCH" }
                );
            }
        }
    }
    out
}

#[derive(Serialize)]
pub struct Table1Json {
    schema: &'static str,
    gamma_note: &'static str,
    ok: bool,
    rows: Vec<RowJson>,
}

#[derive(Serialize)]
struct RowJson {
    r#type: &'static str,
    h: &'static str,
    gamma: &'static str,
    s_simply_laced: Option<&'static str>,
    s_short_coroot: Option<&'static str>,
    s_long_coroot: Option<&'static str>,
    ok: bool,
    instances: Vec<InstanceJson>,
}

#[derive(Serialize)]
struct InstanceJson {
    system: String,
    computed: ValuesJson,
    expected: ValuesJson,
    mismatches: Vec<String>,
}

#[derive(Serialize)]
struct ValuesJson {
    h: i64,
    gamma: i64,
    s_simply_laced: Option<i64>,
    s_short_coroot: Option<i64>,
    s_long_coroot: Option<i64>,
}

impl From<&RowValues> for ValuesJson {
    fn from(v: &RowValues) -> Self {
        ValuesJson {
            h: v.coxeter,
            gamma: v.gamma,
            s_simply_laced: v.s_simply_laced,
            s_short_coroot: v.s_short_coroot,
            s_long_coroot: v.s_long_coroot,
        }
    }
}

fn nonempty(s: &'static str) -> Option<&'static str> {
    (!s.is_empty()).then_some(s)
}

pub fn table1_json(rows: &[FamilyResult]) -> Table1Json {
    Table1Json {
        schema: TABLE1_SCHEMA,
        gamma_note: GAMMA_NOTE,
        ok: rows.iter().all(FamilyResult::ok),
        rows: rows
            .iter()
            .map(|r| RowJson {
                r#type: r.formulas.label,
                h: r.formulas.coxeter,
                gamma: r.formulas.gamma,
                s_simply_laced: nonempty(r.formulas.s_simply_laced),
                s_short_coroot: nonempty(r.formulas.s_short_coroot),
                s_long_coroot: nonempty(r.formulas.s_long_coroot),
                ok: r.ok(),
                instances: r
                    .instances
                    .iter()
                    .map(|i| InstanceJson {
                        system: i.spec.to_string(),
                        computed: (&i.computed).into(),
                        expected: (&i.expected).into(),
                        mismatches: i.mismatches.clone(),
                    })
                    .collect(),
            })
            .collect(),
    }
}

#[derive(Serialize)]
pub struct GrifJson {
    schema: &'static str,
    system: String,
    rep: String,
    dimension: u64,
    mu: Vec<String>,
    pairings: Vec<String>,
    s_values: Vec<String>,
    length_invariant: String,
    c: String,
    levi: Vec<usize>,
    ray_ok: bool,
    checks: GrifChecks,
}

#[derive(Serialize)]
struct GrifChecks {
    direct_eq_closed: bool,
    anti_dominant: bool,
}

impl GrifJson {
    pub fn new(rs: &RootSystem, ws: &WeightSystem, r: &GriffithsReport) -> Self {
        GrifJson {
            schema: REPORT_SCHEMA,
            system: rs.spec().to_string(),
            rep: ws.label().to_string(),
            dimension: ws.dimension(),
            mu: rats(r.mu.coords()),
            pairings: rats(&r.grif_pairings),
            s_values: rats(&r.s_values),
            length_invariant: format_rational(&r.length_invariant),
            c: format_rational(&r.c),
            levi: r.levi.clone(),
            ray_ok: r.ray_ok,
            checks: GrifChecks {
                direct_eq_closed: r.direct_eq_closed,
                anti_dominant: r.anti_dominant,
            },
        }
    }

    pub fn text(&self) -> String {
        let levi: Vec<String> = self.levi.iter().map(ToString::to_string).collect();
        format!(
            "system\t{}\nrep\t{}\ndimension\t{}\nmu\t{}\npairings\t{}\ns_values\t{}\nlength_invariant\t{}\nc\t{}\nlevi\t{}\nray_ok\t{}\ndirect_eq_closed\t{}\nanti_dominant\t{}\n",
            self.system,
            self.rep,
            self.dimension,
            self.mu.join(","),
            self.pairings.join(","),
            self.s_values.join(","),
            self.length_invariant,
            self.c,
            levi.join(","),
            self.ray_ok,
            self.checks.direct_eq_closed,
            self.checks.anti_dominant,
        )
    }
}

#[derive(Serialize)]
pub struct CheckJson {
    schema: &'static str,
    ok: bool,
    systems: usize,
    representations: usize,
    excluded: usize,
    grid_points: usize,
    invariants: Vec<InvariantJson>,
    warnings: Vec<String>,
    counterexample: Option<FailureJson>,
}

#[derive(Serialize)]
struct InvariantJson {
    name: &'static str,
    pass: u64,
    fail: u64,
}

#[derive(Serialize)]
struct FailureJson {
    invariant: &'static str,
    system: String,
    rep: String,
    mu: Option<String>,
    detail: String,
}

impl From<&Failure> for FailureJson {
    fn from(f: &Failure) -> Self {
        FailureJson {
            invariant: f.invariant,
            system: f.system.clone(),
            rep: f.rep.clone(),
            mu: f.mu.clone(),
            detail: f.detail.clone(),
        }
    }
}

impl CheckJson {
    pub fn new(s: &CheckSummary) -> Self {
        CheckJson {
            schema: CHECK_SCHEMA,
            ok: s.ok(),
            systems: s.systems,
            representations: s.reps_tested,
            excluded: s.reps_excluded,
            grid_points: s.grid_points,
            invariants: s
                .tallies
                .iter()
                .map(|(&name, t)| InvariantJson {
                    name,
                    pass: t.pass,
                    fail: t.fail,
                })
                .collect(),
            warnings: s.warnings.clone(),
            counterexample: s.first_failure.as_ref().map(Into::into),
        }
    }

    pub fn text(&self) -> String {
        let mut out = format!(
            "systems\t{}\nrepresentations\t{}\nexcluded\t{}\ngrid_points\t{}\ninvariant\tpass\tfail\n",
            self.systems, self.representations, self.excluded, self.grid_points
        );
        for inv in &self.invariants {
            let _ = writeln!(out, "{}\t{}\t{}", inv.name, inv.pass, inv.fail);
        }
        match &self.counterexample {
            None => out.push_str("status\tok\n"),
            Some(f) => {
                let _ = writeln!(out, "status\tFAIL");
                let _ = writeln!(
                    out,
                    "counterexample\t{}",
                    serde_json::to_string(f).expect("plain data")
                );
            }
        }
        out
    }
}

#[derive(Serialize)]
pub struct Verdict {
    pub p: u64,
    pub close: bool,
}

#[derive(Serialize)]
pub struct PcloseJson {
    pub schema: &'static str,
    pub system: String,
    pub mu: Vec<String>,
    pub twisted: bool,
    pub verdicts: Vec<Verdict>,
    pub max_ratio: Option<String>,
    pub min_p: u64,
    pub quasi_constant: bool,
    pub minuscule: bool,
}

impl PcloseJson {
    pub fn text(&self) -> String {
        let mut out = format!("system\t{}\nmu\t{}\n", self.system, self.mu.join(","));
        for v in &self.verdicts {
            let _ = writeln!(out, "p={}\t{}", v.p, v.close);
        }
        let _ = writeln!(
            out,
            "max_ratio\t{}",
            self.max_ratio.as_deref().unwrap_or("-")
        );
        let _ = writeln!(out, "min_p\t{}", self.min_p);
        let _ = writeln!(out, "quasi_constant\t{}", self.quasi_constant);
        let _ = writeln!(out, "minuscule\t{}", self.minuscule);
        out
    }
}
