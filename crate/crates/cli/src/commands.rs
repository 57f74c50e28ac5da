use std::fs;
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::json;

use sextic_monogen::catalog::{self, Hypothesis};
use sextic_monogen::report::{dec, to_csv, Report, Verdict};
use sextic_monogen::search::{self, CaseI, Scope, SearchBox, SolutionSource};
use sextic_monogen::sextic::{abs_index_detailed, rel_index, FamilyParams, ThetaCoords};
use sextic_monogen::Error;

#[derive(Debug, Parser)]
#[command(name = "monogen", version, about = "Index computations and generator searches for sextic composite fields")]
#[command(allow_negative_numbers = true)]
pub struct Cli {
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate the tabulated Thue solutions under normalization hypotheses.
    AuditLemma1 {
        /// `all`, or a comma-separated list of identity, shift+1, shift-1,
        /// shift+2, shift-2, swap, flip-y1, flip-y2.
        #[arg(long, default_value = "all")]
        scope: String,
    },
    /// Recompute the absolute index of every tabulated generator.
    VerifyTheorem2,
    /// Relative index of the coefficient pair (x1 + y1 w, x2 + y2 w).
    RelIndex(PointArgs),
    /// Absolute index with its factorization and cross-check.
    AbsIndex(PointArgs),
    /// Brute-force unit solutions of the relative Thue equation.
    ThueSearch {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, default_value_t = SearchBox::THUE_DEFAULT)]
        bound: u32,
    },
    /// Search for generators of power integral bases.
    GenSearch {
        #[command(flatten)]
        field: FieldArgs,
        /// Coordinate bound for `exhaustive`, Thue box bound otherwise.
        #[arg(long)]
        bound: Option<u32>,
        #[arg(long, default_value_t = 5)]
        y0_bound: u32,
        /// exhaustive, solutions or catalog.
        #[arg(long, default_value = "exhaustive")]
        scope: String,
    },
    /// Run the case analyses: I1, I2, II, II1, III, III1, IV or all.
    CaseAnalysis {
        #[arg(long, default_value = "all")]
        scope: String,
        /// Largest |y0| for the bounded scopes.
        #[arg(long, default_value_t = SearchBox::Y_MAX_DEFAULT)]
        y0_bound: u32,
        /// Seed of the random symbolic-versus-numeric agreement check.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Write the tabulated solutions and generators.
    ExportCatalog {
        /// lemma1, theorem2 or all (CSV needs a single table).
        #[arg(long, default_value = "all")]
        scope: String,
    },
}

#[derive(Debug, clap::Args)]
pub struct FieldArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub a: BigInt,
    #[arg(long)]
    pub d: u64,
}

#[derive(Debug, clap::Args)]
pub struct PointArgs {
    #[command(flatten)]
    pub field: FieldArgs,
    /// x0,x1,x2,y0,y1,y2
    #[arg(long, allow_hyphen_values = true)]
    pub coords: String,
}

#[derive(Debug)]
pub enum Failure {
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

pub struct Output {
    pub verdict: Verdict,
    pub body: String,
}

impl Output {
    pub fn emit(&self, out: Option<&str>) -> std::io::Result<()> {
        match out {
            Some(path) => fs::write(Path::new(path), &self.body),
            None => {
                print!("{}", self.body);
                Ok(())
            }
        }
    }
}

fn params(f: &FieldArgs) -> Result<FamilyParams, Failure> {
    Ok(FamilyParams::new(f.a.clone(), f.d)?)
}

#[derive(Serialize)]
struct FieldParams {
    #[serde(serialize_with = "dec")]
    a: BigInt,
    d: String,
}

fn field_json(f: &FieldArgs) -> FieldParams {
    FieldParams { a: f.a.clone(), d: f.d.to_string() }
}

struct Built {
    command: &'static str,
    parameters: serde_json::Value,
    verdict: Verdict,
    result: serde_json::Value,
    csv: Option<String>,
}

/// Renders CSV only when it was asked for.
fn csv_if(cli: &Cli, f: impl FnOnce() -> sextic_monogen::Result<String>) -> Result<Option<String>, Failure> {
    Ok((cli.format == Format::Csv).then(f).transpose()?)
}

fn value(v: impl Serialize) -> Result<serde_json::Value, Failure> {
    serde_json::to_value(v).map_err(|e| Failure::Usage(e.to_string()))
}

pub fn run(cli: &Cli) -> Result<Output, Failure> {
    let b = build(cli)?;
    let body = match cli.format {
        Format::Json => {
            let mut s = Report::new(b.command, &b.parameters, b.verdict, &b.result)?.to_json()?;
            s.push('\n');
            s
        }
        Format::Csv => b
            .csv
            .ok_or_else(|| Failure::Usage(format!("{} has no CSV form for this scope; use --format json", b.command)))?,
    };
    Ok(Output { verdict: b.verdict, body })
}

fn build(cli: &Cli) -> Result<Built, Failure> {
    match &cli.command {
        Command::AuditLemma1 { scope } => {
            let modes = parse_hypotheses(scope)?;
            let rep = catalog::audit_lemma1(&modes)?;
            let parameters = json!({ "hypotheses": rep.hypotheses });
            let csv = csv_if(cli, || to_csv("audit-lemma1", &parameters, &rep.rows))?;
            Ok(Built { command: "audit-lemma1", verdict: rep.verdict(), result: value(&rep)?, parameters, csv })
        }
        Command::VerifyTheorem2 => {
            let rep = catalog::verify_theorem2()?;
            let parameters = json!({ "d": "1" });
            let rows: Vec<VerifyRow> = rep
                .rows
                .iter()
                .map(|r| VerifyRow {
                    entry: r.entry.clone(),
                    x1: r.x1.to_string(),
                    x2: r.x2.to_string(),
                    coords: r.coords.to_string(),
                    index: r.index.to_string(),
                    verdict: r.verdict,
                })
                .collect();
            let csv = csv_if(cli, || to_csv("verify-theorem2", &parameters, &rows))?;
            Ok(Built { command: "verify-theorem2", verdict: rep.verdict, result: value(&rep)?, parameters, csv })
        }
        Command::RelIndex(p) => {
            let fp = params(&p.field)?;
            let coords = ThetaCoords::parse(&p.coords)?;
            let [_, c1, c2] = coords.relative(fp.ring());
            let rel = rel_index(&fp, &c1, &c2)?;
            #[derive(Serialize)]
            struct Row {
                c1: String,
                c2: String,
                #[serde(serialize_with = "dec")]
                rel_index: BigInt,
            }
            let row = Row { c1: c1.to_string(), c2: c2.to_string(), rel_index: rel };
            let parameters = json!({ "field": field_json(&p.field), "coords": coords });
            let csv = csv_if(cli, || to_csv("rel-index", &parameters, std::slice::from_ref(&row)))?;
            Ok(Built { command: "rel-index", verdict: Verdict::Completed, result: value(&row)?, parameters, csv })
        }
        Command::AbsIndex(p) => {
            let fp = params(&p.field)?;
            let coords = ThetaCoords::parse(&p.coords)?;
            let parameters = json!({ "field": field_json(&p.field), "coords": coords });
            let (verdict, result, csv) = match abs_index_detailed(&fp, &coords) {
                Ok(b) => {
                    let csv = csv_if(cli, || to_csv("abs-index", &parameters, std::slice::from_ref(&b)))?;
                    (Verdict::Completed, value(&b)?, csv)
                }
                Err(e @ Error::CrossCheckFailed { .. }) => (Verdict::Failed, json!({ "error": e.to_string() }), None),
                Err(e) => return Err(e.into()),
            };
            Ok(Built { command: "abs-index", verdict, result, parameters, csv })
        }
        Command::ThueSearch { field, bound } => {
            let fp = params(field)?;
            SearchBox::new(*bound, 1)?;
            let s = search::thue_solutions(&fp.a, fp.d(), *bound)?;
            let parameters = json!({ "field": field_json(field), "bound": bound.to_string() });
            #[derive(Serialize)]
            struct Row {
                y1: String,
                y2: String,
            }
            let rows: Vec<Row> =
                s.solutions.iter().map(|p| Row { y1: p.y1.to_string(), y2: p.y2.to_string() }).collect();
            let csv = csv_if(cli, || to_csv("thue-search", &parameters, &rows))?;
            let result = json!({
                "bounded": format!("|u|,|v| <= {bound}"),
                "iterations": s.iterations.to_string(),
                "solutions": s.solutions,
            });
            Ok(Built { command: "thue-search", verdict: Verdict::Completed, result, parameters, csv })
        }
        Command::GenSearch { field, bound, y0_bound, scope } => {
            let fp = params(field)?;
            let (records, extra) = match scope.as_str() {
                "exhaustive" => {
                    let bound = bound.unwrap_or(SearchBox::GENERATOR_DEFAULT);
                    SearchBox::new(bound, bound)?;
                    let s = search::generator_search(&fp, bound)?;
                    let extra = json!({
                        "bounded": format!("x0 = 0, other coordinates in [-{bound}, {bound}]"),
                        "iterations": s.iterations.to_string(),
                        "relative_generators": s.relative_generators.to_string(),
                    });
                    (s.records, extra)
                }
                "solutions" | "catalog" => {
                    let bound = bound.unwrap_or(SearchBox::THUE_DEFAULT);
                    SearchBox::new(bound, *y0_bound)?;
                    let source = if scope == "solutions" {
                        SolutionSource::BruteForce { bound }
                    } else {
                        SolutionSource::Catalog { shift: -2 }
                    };
                    let recs = search::generators_from_solutions(&fp, *y0_bound, source)?;
                    (recs, json!({ "bounded": format!("|y0| <= {y0_bound}"), "source": source }))
                }
                other => return Err(Failure::Usage(format!("unknown --scope {other:?}; expected exhaustive, solutions or catalog"))),
            };
            let parameters = json!({
                "field": field_json(field),
                "scope": scope,
                "bound": bound.map(|b| b.to_string()),
                "y0_bound": y0_bound.to_string(),
            });
            let csv = csv_if(cli, || to_csv("gen-search", &parameters, &generator_rows(&records)))?;
            let result = json!({ "search": extra, "generators": records });
            Ok(Built { command: "gen-search", verdict: Verdict::Completed, result, parameters, csv })
        }
        Command::CaseAnalysis { scope, y0_bound, seed } => {
            SearchBox::new(1, *y0_bound)?;
            let wanted = parse_scopes(scope)?;
            let mut verdict = Verdict::Pass;
            let mut reports = serde_json::Map::new();
            let mut rows = Vec::new();
            for w in wanted {
                match w {
                    CaseScope::I(c) => {
                        let r = search::case_i_analysis(c, *seed)?;
                        verdict = verdict.and(r.verdict);
                        reports.insert(format!("{c:?}"), value(&r)?);
                    }
                    CaseScope::Fixed(s) => {
                        let r = search::case_d1_d3_analysis(s, *y0_bound)?;
                        verdict = verdict.and(r.verdict);
                        rows.extend(generator_rows(&r.generators).into_iter().map(|g| CaseRow { scope: s.to_string(), g }));
                        reports.insert(s.to_string(), value(&r)?);
                    }
                }
            }
            let parameters = json!({ "scope": scope, "y0_bound": y0_bound.to_string(), "seed": seed.to_string() });
            let csv = csv_if(cli, || to_csv("case-analysis", &parameters, &rows))?;
            Ok(Built { command: "case-analysis", verdict, result: serde_json::Value::Object(reports), parameters, csv })
        }
        Command::ExportCatalog { scope } => {
            let parameters = json!({ "scope": scope });
            let (result, csv) = match scope.as_str() {
                "lemma1" => {
                    let rows = catalog::lemma1_rows();
                    (value(&rows)?, csv_if(cli, || to_csv("export-catalog", &parameters, &rows))?)
                }
                "theorem2" => {
                    let rows = catalog::theorem2_rows();
                    (value(&rows)?, csv_if(cli, || to_csv("export-catalog", &parameters, &rows))?)
                }
                "all" => (json!({ "lemma1": catalog::lemma1_rows(), "theorem2": catalog::theorem2_rows() }), None),
                other => return Err(Failure::Usage(format!("unknown --scope {other:?}; expected lemma1, theorem2 or all"))),
            };
            Ok(Built { command: "export-catalog", verdict: Verdict::Completed, result, parameters, csv })
        }
    }
}

#[derive(Serialize)]
struct VerifyRow {
    entry: String,
    x1: String,
    x2: String,
    coords: String,
    index: String,
    verdict: Verdict,
}

#[derive(Serialize)]
struct GeneratorRow {
    a: String,
    d: String,
    y0: String,
    x1: String,
    x2: String,
    epsilon: String,
    index: String,
    coords: String,
}

#[derive(Serialize)]
struct CaseRow {
    scope: String,
    #[serde(flatten)]
    g: GeneratorRow,
}

fn generator_rows(records: &[sextic_monogen::sextic::GeneratorRecord]) -> Vec<GeneratorRow> {
    records
        .iter()
        .map(|r| GeneratorRow {
            a: r.a.to_string(),
            d: r.d().to_string(),
            y0: r.y0.to_string(),
            x1: r.x1.to_string(),
            x2: r.x2.to_string(),
            epsilon: r.epsilon.to_string(),
            index: r.index.to_string(),
            coords: r.coords.to_string(),
        })
        .collect()
}

fn parse_hypotheses(scope: &str) -> Result<Vec<Hypothesis>, Failure> {
    if scope == "all" {
        return Ok(Hypothesis::ALL.to_vec());
    }
    scope
        .split(',')
        .map(|s| {
            Hypothesis::parse(s.trim()).ok_or_else(|| Failure::Usage(format!("unknown hypothesis {s:?} in --scope")))
        })
        .collect()
}

enum CaseScope {
    I(CaseI),
    Fixed(Scope),
}

fn parse_scopes(scope: &str) -> Result<Vec<CaseScope>, Failure> {
    if scope == "all" {
        let mut v = vec![CaseScope::I(CaseI::I1), CaseScope::I(CaseI::I2)];
        v.extend(Scope::ALL.into_iter().map(CaseScope::Fixed));
        return Ok(v);
    }
    scope
        .split(',')
        .map(|s| {
            let t = s.trim().to_ascii_uppercase().replace('.', "");
            match t.as_str() {
                "I1" => Ok(CaseScope::I(CaseI::I1)),
                "I2" => Ok(CaseScope::I(CaseI::I2)),
                _ => Scope::parse(&t)
                    .map(CaseScope::Fixed)
                    .ok_or_else(|| Failure::Usage(format!("unknown case {s:?} in --scope"))),
            }
        })
        .collect()
}
