mod report;
mod spec;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::{Parser, Subcommand};
use serde::Serialize;

use fq_langlands::finite_torus::TorsionPoint;
use fq_langlands::oracle::{self, MatrixGroup, MatrixGroupSpec, NormWitness, SmallField};
use fq_langlands::verify::{self, Check};
use fq_langlands::weil_deligne::enumerate_special_wd;
use fq_langlands::weil_params::{Bounds, ParameterSpace};
use fq_langlands::weyl::FrobeniusElement;

use report::{emit, Table};
use spec::{GroupSpec, Positional};

/// Langlands parameters of finite reductive groups.
#[derive(Parser)]
#[command(name = "fql", version)]
struct Cli {
    /// Emit JSON instead of aligned tables.
    #[arg(long, global = true)]
    json: bool,
    /// Read the root datum (and optional twist) from a file.
    #[arg(long, global = true)]
    datum_file: Option<PathBuf>,
    /// Frobenius twist: trivial, -w0, perm:i,j,.., an inline matrix a,b;c,d, or a matrix file.
    #[arg(long, global = true, allow_hyphen_values = true)]
    twist: Option<String>,
    /// Largest allowed level of a torsion point.
    #[arg(long, global = true)]
    level_bound: Option<u32>,
    /// Largest allowed Weyl group order.
    #[arg(long, global = true)]
    weyl_bound: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Twisted classes of the Weyl coset with their torus orders, e.g. `tori GL2 q=3`.
    Tori {
        #[arg(allow_hyphen_values = true)]
        args: Vec<String>,
    },
    /// Parameter classes, e.g. `parameters SL2 q=3 kind=wd` (kind: rigid, weil, inertial, wd).
    Parameters {
        #[arg(allow_hyphen_values = true)]
        args: Vec<String>,
    },
    /// Oracle comparisons and invariant suites; exit code 1 on any failure.
    Verify {
        #[arg(allow_hyphen_values = true)]
        args: Vec<String>,
    },
    /// Brute-force oracle: `classes GL2 q=3`, `torus GL2 q=3`, `norm q=3 m=1 d=2`.
    Oracle {
        op: String,
        #[arg(allow_hyphen_values = true)]
        args: Vec<String>,
    },
}

struct Ctx {
    json: bool,
    datum_file: Option<PathBuf>,
    twist: Option<String>,
    bounds: Bounds,
}

impl Ctx {
    fn group(&self, pos: &Positional) -> Result<GroupSpec> {
        GroupSpec::resolve(pos, self.datum_file.as_deref(), self.twist.as_deref())
    }

    fn space(&self, g: &GroupSpec) -> Result<ParameterSpace> {
        Ok(ParameterSpace::for_group(&g.datum, &g.twist, g.q, self.bounds)?)
    }
}

fn word(space: &ParameterSpace, x: &FrobeniusElement) -> String {
    let w = space.coset.weyl.word(x.weyl_part);
    if w.is_empty() {
        "1".into()
    } else {
        w.iter().map(|i| format!("s{}", i + 1)).collect()
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

#[derive(Serialize)]
struct ToriRow {
    index: usize,
    frob_word: String,
    class_size: usize,
    torus_order: i64,
    divisors: Vec<i64>,
}

#[derive(Serialize)]
struct ToriReport {
    group: String,
    q: i64,
    twisted_classes: Vec<ToriRow>,
}

fn cmd_tori(ctx: &Ctx, args: &[String]) -> Result<()> {
    let pos = Positional::parse(args)?;
    pos.only(&["q", "twist"])?;
    let g = ctx.group(&pos)?;
    let space = ctx.space(&g)?;
    let mut rows = Vec::new();
    for (index, c) in space.twisted_classes().iter().enumerate() {
        let t = space.fixed_group(&c.representative)?;
        rows.push(ToriRow { index, frob_word: word(&space, &c.representative), class_size: c.size(), torus_order: t.order(), divisors: t.divisors.clone() });
    }
    let mut table = Table::new(format!("{} q={}: {} twisted classes", g.label, g.q, rows.len()), vec!["class", "frobenius", "size", "|T(F_q)|", "divisors"]);
    for r in &rows {
        table.rows.push(vec![r.index.to_string(), r.frob_word.clone(), r.class_size.to_string(), r.torus_order.to_string(), join(&r.divisors)]);
    }
    emit(ctx.json, &table, &ToriReport { group: g.label, q: g.q, twisted_classes: rows })
}

#[derive(Serialize)]
struct WeilRow {
    inertial_vector: String,
    level: u32,
    frob_word: String,
    class_size: usize,
    packet_bound: usize,
}

#[derive(Serialize)]
struct InertialRow {
    inertial_vector: String,
    level: u32,
    pseudo_levi_type: String,
    orbit_size: usize,
    component_group: String,
}

#[derive(Serialize)]
struct WdRow {
    inertial_vector: String,
    level: u32,
    pseudo_levi_type: String,
    orbit_partitions: Vec<String>,
    special: bool,
    #[serde(rename = "A_order")]
    a_order: usize,
    #[serde(rename = "Abar_order")]
    abar_order: usize,
    #[serde(rename = "A_phi_order")]
    a_phi_order: usize,
    irr_a_phi: usize,
    frob_coset_id: usize,
    frob_word: String,
}

#[derive(Serialize)]
struct ParameterReport<R> {
    group: String,
    q: i64,
    kind: String,
    count: usize,
    classes: Vec<R>,
    #[serde(skip_serializing_if = "Option::is_none")]
    total_irr_a_phi: Option<usize>,
}

fn weil_table(title: String, rows: &[WeilRow]) -> Table {
    let mut table = Table::new(title, vec!["inertial", "level", "frobenius", "size", "packet bound"]);
    for r in rows {
        table.rows.push(vec![r.inertial_vector.clone(), r.level.to_string(), r.frob_word.clone(), r.class_size.to_string(), r.packet_bound.to_string()]);
    }
    table
}

fn cmd_parameters(ctx: &Ctx, args: &[String]) -> Result<()> {
    let pos = Positional::parse(args)?;
    pos.only(&["q", "twist", "kind"])?;
    let kind: String = pos.get("kind")?.unwrap_or_else(|| "weil".into());
    let g = ctx.group(&pos)?;
    let space = ctx.space(&g)?;
    let title = |n: usize, what: &str| format!("{} q={}: {n} {what}", g.label, g.q);
    let point = |v: &TorsionPoint| v.to_string();
    match kind.as_str() {
        "rigid" => {
            let mut rows = Vec::new();
            for r in space.enumerate_rigid()? {
                let p = &r.parameter;
                rows.push(WeilRow {
                    inertial_vector: point(&p.inertial),
                    level: p.inertial.level(),
                    frob_word: word(&space, &p.frob),
                    class_size: r.size,
                    packet_bound: space.packet_size_bound(&p.inertial, &p.frob)?,
                });
            }
            let table = weil_table(title(rows.len(), "rigid classes"), &rows);
            emit(ctx.json, &table, &ParameterReport { group: g.label.clone(), q: g.q, kind, count: rows.len(), classes: rows, total_irr_a_phi: None })
        }
        "weil" => {
            let mut rows = Vec::new();
            for c in space.weil_classes()? {
                rows.push(WeilRow {
                    inertial_vector: point(&c.inertial_rep),
                    level: c.inertial_rep.level(),
                    frob_word: word(&space, &c.frob_rep),
                    class_size: c.size,
                    packet_bound: space.packet_size_bound(&c.inertial_rep, &c.frob_rep)?,
                });
            }
            let table = weil_table(title(rows.len(), "Weil classes"), &rows);
            emit(ctx.json, &table, &ParameterReport { group: g.label.clone(), q: g.q, kind, count: rows.len(), classes: rows, total_irr_a_phi: None })
        }
        "inertial" => {
            let mut rows = Vec::new();
            for c in space.inertial_classes()? {
                let v = &c.representative;
                let data = space.inertial_data(v);
                rows.push(InertialRow {
                    inertial_vector: point(v),
                    level: v.level(),
                    pseudo_levi_type: data.levi.type_label.clone(),
                    orbit_size: space.orbit_size(v),
                    component_group: data.omega.group.label(),
                });
            }
            let mut table = Table::new(title(rows.len(), "inertial classes"), vec!["inertial", "level", "pseudo-Levi", "orbit", "pi_0"]);
            for r in &rows {
                table.rows.push(vec![r.inertial_vector.clone(), r.level.to_string(), r.pseudo_levi_type.clone(), r.orbit_size.to_string(), r.component_group.clone()]);
            }
            emit(ctx.json, &table, &ParameterReport { group: g.label.clone(), q: g.q, kind, count: rows.len(), classes: rows, total_irr_a_phi: None })
        }
        "wd" => {
            let e = enumerate_special_wd(&space)?;
            let rows: Vec<WdRow> = e
                .classes
                .iter()
                .map(|c| WdRow {
                    inertial_vector: point(&c.inertial),
                    level: c.level,
                    pseudo_levi_type: c.pseudo_levi_type.clone(),
                    orbit_partitions: c.orbit.partitions(),
                    special: c.special,
                    a_order: c.a_order,
                    abar_order: c.abar_order,
                    a_phi_order: c.a_phi_order,
                    irr_a_phi: c.a_phi_classes,
                    frob_coset_id: c.frob_coset_id,
                    frob_word: word(&space, &c.frob),
                })
                .collect();
            let mut table = Table::new(
                title(rows.len(), "special WD classes"),
                vec!["inertial", "level", "pseudo-Levi", "orbit", "|A|", "|Abar|", "|A_phi|", "|Irr A_phi|", "coset"],
            );
            for r in &rows {
                let orbit = if r.orbit_partitions.is_empty() { "-".to_string() } else { r.orbit_partitions.join(" x ") };
                table.rows.push(vec![
                    r.inertial_vector.clone(),
                    r.level.to_string(),
                    r.pseudo_levi_type.clone(),
                    orbit,
                    r.a_order.to_string(),
                    r.abar_order.to_string(),
                    r.a_phi_order.to_string(),
                    r.irr_a_phi.to_string(),
                    r.frob_coset_id.to_string(),
                ]);
            }
            table.footer.push(format!("sum |Irr(A_phi)| = {}", e.total_irr));
            emit(ctx.json, &table, &ParameterReport { group: g.label.clone(), q: g.q, kind, count: rows.len(), classes: rows, total_irr_a_phi: Some(e.total_irr) })
        }
        other => bail!("unknown kind {other}; expected rigid, weil, inertial or wd"),
    }
}

#[derive(Serialize)]
struct VerifyReport {
    group: String,
    q: i64,
    passed: bool,
    checks: Vec<Check>,
}

fn cmd_verify(ctx: &Ctx, args: &[String]) -> Result<bool> {
    let pos = Positional::parse(args)?;
    pos.only(&["q", "twist"])?;
    let g = ctx.group(&pos)?;
    let space = ctx.space(&g)?;
    let oracle_group = if g.is_split() { g.family.and_then(|(f, n)| verify::oracle_spec(f, n, g.q)) } else { None };
    let checks = verify::verify_group(&g.datum, &g.twist, g.q, oracle_group, &space)?;
    let passed = checks.iter().all(|c| c.passed);
    let mut table = Table::new(format!("{} q={}: {}", g.label, g.q, if passed { "pass" } else { "FAIL" }), vec!["result", "check", "detail"]);
    for c in &checks {
        table.rows.push(vec![if c.passed { "pass" } else { "FAIL" }.into(), c.name.clone(), c.detail.clone()]);
    }
    emit(ctx.json, &table, &VerifyReport { group: g.label, q: g.q, passed, checks })?;
    Ok(passed)
}

#[derive(Serialize)]
struct ClassReport {
    group: String,
    q: u64,
    modulus: Vec<u32>,
    order: usize,
    classes: usize,
}

#[derive(Serialize)]
struct TorusPointRow {
    index: usize,
    frob_word: String,
    points: u64,
}

fn cmd_oracle(ctx: &Ctx, op: &str, args: &[String]) -> Result<()> {
    let pos = Positional::parse(args)?;
    match op {
        "classes" => {
            pos.only(&["q"])?;
            let name = pos.group.clone().ok_or_else(|| anyhow::anyhow!("missing group, e.g. SL2"))?;
            let q: u64 = pos.require("q")?;
            let spec: MatrixGroupSpec = format!("{name}:{q}").parse()?;
            let field = SmallField::new(q)?;
            let modulus = field.modulus().to_vec();
            let g = MatrixGroup::enumerate(spec, field)?;
            let report = ClassReport { group: name.clone(), q, modulus, order: g.order(), classes: g.class_count() };
            let mut table = Table::new(format!("{name}(F_{q})"), vec!["order", "classes"]);
            table.rows.push(vec![report.order.to_string(), report.classes.to_string()]);
            emit(ctx.json, &table, &report)
        }
        "torus" => {
            pos.only(&["q", "twist"])?;
            let g = ctx.group(&pos)?;
            let space = ctx.space(&g)?;
            let mut rows = Vec::new();
            for (index, c) in space.twisted_classes().iter().enumerate() {
                rows.push(TorusPointRow { index, frob_word: word(&space, &c.representative), points: oracle::torus_point_count(&c.representative.combined, g.q)? });
            }
            let mut table = Table::new(format!("{} q={}: points by field enumeration", g.label, g.q), vec!["class", "frobenius", "points"]);
            for r in &rows {
                table.rows.push(vec![r.index.to_string(), r.frob_word.clone(), r.points.to_string()]);
            }
            emit(ctx.json, &table, &rows)
        }
        "norm" => {
            pos.only(&["q", "m", "d"])?;
            let w: NormWitness = oracle::norm_surjectivity_check(pos.require("q")?, pos.require("m")?, pos.require("d")?)?;
            let mut table = Table::new("norm map", vec!["source", "target", "image", "kernel", "surjective"]);
            table.rows.push(vec![w.source_order.to_string(), w.target_order.to_string(), w.image_size.to_string(), w.kernel_order.to_string(), w.surjective.to_string()]);
            emit(ctx.json, &table, &w)
        }
        other => bail!("unknown oracle operation {other}; expected classes, torus or norm"),
    }
}

fn run(cli: Cli) -> Result<bool> {
    let mut bounds = Bounds::default();
    if let Some(b) = cli.level_bound {
        bounds.level = b;
    }
    if let Some(b) = cli.weyl_bound {
        bounds.weyl = b;
    }
    let ctx = Ctx { json: cli.json, datum_file: cli.datum_file, twist: cli.twist, bounds };
    match &cli.command {
        Command::Tori { args } => cmd_tori(&ctx, args).map(|_| true),
        Command::Parameters { args } => cmd_parameters(&ctx, args).map(|_| true),
        Command::Verify { args } => cmd_verify(&ctx, args),
        Command::Oracle { op, args } => cmd_oracle(&ctx, op, args).map(|_| true),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
