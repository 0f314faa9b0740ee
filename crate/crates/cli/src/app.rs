//! Subcommand parsing and dispatch.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use avc::{angle_sum_target, enumerate_avc, enumerate_avc_per_f, AVCSet, VertexCombo};
use catalog::{build, census, FamilyId};
use clap::{Args, Parser, Subcommand, ValueEnum};
use quadsolve::{
    check_tile, solve_almost_equilateral, solve_general_quad, solve_kite_rhombus, solve_triangle_spec, QuadClass,
    SolveReport,
};
use sphercore::Angle;
use verifier::{verify, verify_combinatorial};

use crate::document::TilingDocument;
use crate::export::{to_obj, to_svg};
use crate::tables;

pub const EXIT_OK: i32 = 0;
/// Verification failed or a computation had no solution.
pub const EXIT_FAILURE: i32 = 1;
/// Bad command line or unreadable input.
pub const EXIT_USAGE: i32 = 2;

/// Overrides the default tolerance of `catalog` and `verify`.
pub const TOL_ENV: &str = "SPHERETILE_TOL";
const DEFAULT_TOL: f64 = 1e-9;

#[derive(Parser, Debug)]
#[command(
    name = "spheretile",
    version,
    about = "Build, solve, enumerate and verify edge-to-edge tilings of the sphere by congruent triangles and quadrilaterals",
    after_help = "Angles are multiples of π: `2/3`, `2/3 pi`, `0.4568`, or radians as `1.2 rad`.\n\
                  Environment: SPHERETILE_TOL sets the default tolerance (otherwise 1e-9).\n\
                  Exit status: 0 success, 1 verification or computation failure, 2 usage or input error."
)]
struct Cli {
    /// Report errors on stderr as one JSON object
    #[arg(long, global = true)]
    json_errors: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build and verify a catalog family and print its document; without --family, list the catalog
    Catalog(CatalogArgs),
    /// Solve a tile template from its angles
    Solve(SolveArgs),
    /// List the anglewise vertex combinations of a tile
    Avc(AvcArgs),
    /// Verify a tiling document (use - for stdin)
    Verify(VerifyArgs),
    /// Print Tables 1–5 as TSV
    Tables(TablesArgs),
    /// Convert a tiling document to JSON, OBJ or SVG
    Export(ExportArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Obj,
    Svg,
}

#[derive(Args, Debug)]
struct CatalogArgs {
    /// Family name, e.g. P6, QP6, E△1, Etri1, E'quad4, S16_4
    #[arg(long)]
    family: Option<String>,
    /// Timezone count of an earth map
    #[arg(long)]
    p: Option<u32>,
    /// Index of a flip family
    #[arg(long)]
    q: Option<u32>,
    /// Tile count; picks the index that gives it
    #[arg(long)]
    f: Option<u32>,
    /// Flip position s of the two-parameter flips (needs --t)
    #[arg(long, requires = "t")]
    s: Option<u32>,
    /// Flip length t of the two-parameter flips (needs --s)
    #[arg(long, requires = "s")]
    t: Option<u32>,
    /// Free continuous parameters, comma separated
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    free: Vec<f64>,
    /// Verification tolerance
    #[arg(long)]
    tol: Option<f64>,
    /// Output format: json (default), obj or svg for a family; json or TSV (default) for the listing
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Args, Debug)]
struct SolveArgs {
    /// Tile class: a2bc, a2b2, a3b, a4, abc, a2b, a3 (or general, kite, ...)
    #[arg(long)]
    class: String,
    /// One angle per distinct angle of the class, as multiples of π
    #[arg(long, num_args = 1.., required = true, allow_negative_numbers = true)]
    angles: Vec<String>,
    /// Tile count; checks the angle sum
    #[arg(long)]
    f: Option<u32>,
}

#[derive(Args, Debug)]
struct AvcArgs {
    /// Tile class: a2bc, a2b2, a3b, a4, abc, a2b, a3
    #[arg(long)]
    class: String,
    /// Angles as multiples of π; with --f or --max-f the last one may be left out
    #[arg(long, num_args = 1.., required = true, allow_negative_numbers = true)]
    angles: Vec<String>,
    /// Tile count; completes a missing angle from the angle sum
    #[arg(long, conflicts_with = "max_f")]
    f: Option<u32>,
    /// List every even tile count up to this one, completing the missing angle each time
    #[arg(long)]
    max_f: Option<u32>,
    /// Largest vertex degree considered
    #[arg(long)]
    max_degree: Option<u32>,
    /// Print JSON instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Document path, or - for stdin
    file: String,
    /// Verification tolerance
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Args, Debug)]
struct TablesArgs {
    /// Print only this table (1 to 5)
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=5))]
    table: Option<u8>,
}

#[derive(Args, Debug)]
struct ExportArgs {
    /// Document path, or - for stdin
    file: String,
    /// Output format
    #[arg(long, value_enum)]
    format: Format,
    /// Write here instead of stdout
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Debug)]
enum AppError {
    Usage(String),
    Input(String),
    Failure(String),
}

impl AppError {
    fn code(&self) -> i32 {
        match self {
            AppError::Failure(_) => EXIT_FAILURE,
            _ => EXIT_USAGE,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            AppError::Usage(_) => "usage",
            AppError::Input(_) => "input",
            AppError::Failure(_) => "failure",
        }
    }

    fn message(&self) -> &str {
        match self {
            AppError::Usage(m) | AppError::Input(m) | AppError::Failure(m) => m,
        }
    }
}

fn report_error(err: &AppError, json: bool, stderr: &mut dyn Write) {
    if json {
        let v = serde_json::json!({ "error": err.kind(), "message": err.message(), "exit_code": err.code() });
        let _ = writeln!(stderr, "{v}");
    } else {
        let _ = writeln!(stderr, "error: {}", err.message());
    }
}

/// Runs one command line and returns the exit status.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let json_errors = args.iter().any(|a| a == "--json-errors");
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{}", e.render());
                return EXIT_OK;
            }
            if json_errors {
                let text = e.render().to_string();
                let first = text.lines().next().unwrap_or_default().trim_start_matches("error: ").to_string();
                report_error(&AppError::Usage(first), true, stderr);
            } else {
                let _ = write!(stderr, "{}", e.render());
            }
            return EXIT_USAGE;
        }
    };
    match dispatch(cli.command, stdin, stdout, stderr) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            report_error(&e, cli.json_errors, stderr);
            e.code()
        }
    }
}

fn dispatch(cmd: Command, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<(), AppError> {
    let out = match cmd {
        Command::Catalog(a) => catalog_cmd(a, stderr)?,
        Command::Solve(a) => solve_cmd(a)?,
        Command::Avc(a) => avc_cmd(a)?,
        Command::Verify(a) => return verify_cmd(a, stdin, stdout),
        Command::Tables(a) => tables_cmd(a)?,
        Command::Export(a) => {
            let doc = read_document(&a.file, stdin)?;
            let text = render(&doc, a.format)?;
            if let Some(path) = a.output {
                return std::fs::write(&path, text)
                    .map_err(|e| AppError::Input(format!("cannot write {}: {e}", path.display())));
            }
            text
        }
    };
    stdout.write_all(out.as_bytes()).map_err(|e| AppError::Failure(format!("cannot write output: {e}")))
}

fn tolerance(arg: Option<f64>) -> Result<f64, AppError> {
    let tol = match arg {
        Some(t) => t,
        None => match std::env::var(TOL_ENV) {
            Ok(v) => v.trim().parse().map_err(|_| AppError::Usage(format!("{TOL_ENV}={v:?} is not a number")))?,
            Err(_) => DEFAULT_TOL,
        },
    };
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(AppError::Usage(format!("tolerance must be positive, got {tol}")));
    }
    Ok(tol)
}

fn render(doc: &TilingDocument, format: Format) -> Result<String, AppError> {
    let r = match format {
        Format::Json => Ok(doc.to_json()),
        Format::Obj => to_obj(doc),
        Format::Svg => to_svg(doc),
    };
    r.map_err(|e| AppError::Input(e.to_string()))
}

fn catalog_cmd(a: CatalogArgs, stderr: &mut dyn Write) -> Result<String, AppError> {
    let Some(name) = a.family else {
        return Ok(if a.format == Some(Format::Json) {
            let mut s = serde_json::to_string_pretty(&census()).expect("census serializes");
            s.push('\n');
            s
        } else {
            let mut s = String::from("name\ttile\tgroup\taliases\tparameters\n");
            for e in census() {
                s.push_str(&format!("{}\t{}\t{}\t{}\t{}\n", e.name, e.tile, e.group, e.aliases.join(", "), e.parameters));
            }
            s
        });
    };
    let tol = tolerance(a.tol)?;
    let mut id = FamilyId::parse(&name).map_err(|e| AppError::Usage(e.to_string()))?;
    if let Some(p) = a.p {
        id = id.with_p(p);
    }
    if let Some(q) = a.q {
        id = id.with_q(q);
    }
    if let Some(f) = a.f {
        id = id.with_f(f);
    }
    if let (Some(s), Some(t)) = (a.s, a.t) {
        id = id.with_st(s, t);
    }
    if !a.free.is_empty() {
        id = id.with_free(a.free);
    }
    let r = build(&id).map_err(|e| match e {
        catalog::CatalogError::InvalidFamily(_) | catalog::CatalogError::InvalidParams(_) => AppError::Usage(e.to_string()),
        _ => AppError::Failure(format!("{id}: {e}")),
    })?;
    let report = verify(&r, tol);
    if !report.pass {
        let _ = writeln!(stderr, "{report}");
        return Err(AppError::Failure(format!("{id} failed verification at tolerance {tol:e}")));
    }
    let doc = TilingDocument::from_realization(&id.to_string(), Some(id), &r, tol);
    render(&doc, a.format.unwrap_or(Format::Json))
}

fn parse_class(s: &str) -> Result<QuadClass, AppError> {
    s.parse().map_err(|e: quadsolve::ParseClassError| AppError::Usage(e.to_string()))
}

fn parse_angles(v: &[String]) -> Result<Vec<Angle>, AppError> {
    v.iter().map(|s| s.parse::<Angle>().map_err(|e| AppError::Usage(e.to_string()))).collect()
}

fn solve_cmd(a: SolveArgs) -> Result<String, AppError> {
    let class = parse_class(&a.class)?;
    let angles = parse_angles(&a.angles)?;
    let want = class.angle_labels().len();
    if angles.len() != want {
        return Err(AppError::Usage(format!("class {class} takes {want} angles, got {}", angles.len())));
    }
    let fail = |e: quadsolve::SolveError| AppError::Failure(e.to_string());
    let with_f = |mut spec: quadsolve::QuadSpec| {
        spec.f = a.f.or(spec.f);
        spec
    };
    let json = match class {
        QuadClass::AlmostEquilateral => {
            let rep = solve_almost_equilateral(angles[0], angles[1], angles[2], angles[3], a.f).map_err(fail)?;
            serde_json::to_string_pretty(&rep)
        }
        QuadClass::General => {
            let specs = solve_general_quad(angles[0], angles[1], angles[2], angles[3], a.f).map_err(fail)?;
            let reps: Vec<SolveReport> =
                specs.into_iter().map(|s| check_tile(&with_f(s))).collect::<Result<_, _>>().map_err(fail)?;
            serde_json::to_string_pretty(&reps)
        }
        QuadClass::Kite | QuadClass::Rhombus => {
            let spec = solve_kite_rhombus(class, &angles).map_err(fail)?;
            serde_json::to_string_pretty(&check_tile(&with_f(spec)).map_err(fail)?)
        }
        _ => {
            let spec = solve_triangle_spec(class, &angles, a.f).map_err(fail)?;
            serde_json::to_string_pretty(&check_tile(&spec).map_err(fail)?)
        }
    };
    let mut s = json.expect("reports serialize");
    s.push('\n');
    Ok(s)
}

/// Fills in the last angle from the angle sum `f` tiles need. Complete
/// input is returned unchanged.
fn complete_angles(class: QuadClass, given: &[Angle], f: u32) -> Result<Vec<Angle>, AppError> {
    let labels = class.angle_labels();
    if given.len() == labels.len() {
        return Ok(given.to_vec());
    }
    if given.len() + 1 != labels.len() {
        return Err(AppError::Usage(format!(
            "class {class} takes {} angles ({} with a tile count), got {}",
            labels.len(),
            labels.len() - 1,
            given.len()
        )));
    }
    let target = angle_sum_target(f, class).map_err(|e| AppError::Usage(e.to_string()))?;
    let corners = class.corners();
    let mult = |l| corners.iter().filter(|c| c.0 == l).count() as i64;
    let known: Angle = labels.iter().zip(given).map(|(&l, &x)| x * mult(l)).sum();
    let last = labels[labels.len() - 1];
    let missing = (target - known) / mult(last);
    if !(missing.radians() > 0.0) {
        return Err(AppError::Failure(format!("f = {f} leaves no room for {last}")));
    }
    let mut v = given.to_vec();
    v.push(missing);
    Ok(v)
}

/// Combos in the customary order: higher powers of earlier angles first.
fn combo_list(set: &AVCSet) -> String {
    let mut v: Vec<&VertexCombo> = set.combos.iter().collect();
    v.sort_by(|x, y| y.cmp(x));
    v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")
}

fn avc_json(set: &AVCSet) -> serde_json::Value {
    let angles: Vec<(String, String)> = set.angles.iter().map(|(l, a)| (l.to_string(), tables::pi_text(*a))).collect();
    let mut combos: Vec<&VertexCombo> = set.combos.iter().collect();
    combos.sort_by(|x, y| y.cmp(x));
    serde_json::json!({
        "class": set.class.short_name(),
        "f": set.f,
        "angles": angles,
        "combos": combos.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
    })
}

fn avc_cmd(a: AvcArgs) -> Result<String, AppError> {
    let class = parse_class(&a.class)?;
    let given = parse_angles(&a.angles)?;
    let bad = |e: avc::AvcError| AppError::Usage(e.to_string());
    if let Some(max_f) = a.max_f {
        let start = if class.is_triangle() { 4 } else { 6 };
        let fs: Vec<u32> = (start..=max_f).filter(|f| f % 2 == 0).collect();
        // f values whose angle completion fails are dropped
        let ok: Vec<u32> = fs.iter().copied().filter(|&f| complete_angles(class, &given, f).is_ok()).collect();
        let complete_all = given.len() == class.angle_labels().len();
        let sets = enumerate_avc_per_f(class, |f| complete_angles(class, &given, f).unwrap_or_default(), &ok);
        let mut lines = Vec::new();
        let mut json = Vec::new();
        for (f, set) in sets {
            let Ok(mut set) = set else { continue };
            if complete_all {
                // fixed angles: keep only the tile count their sum gives
                let sum: Angle = class.corners().iter().map(|c| set.angle(c.0).unwrap()).sum();
                if !sum.approx_eq(&angle_sum_target(f, class).map_err(bad)?, 1e-9) {
                    continue;
                }
            }
            set.f = Some(f);
            lines.push(format!("f={f}: {}", combo_list(&set)));
            json.push(avc_json(&set));
        }
        return Ok(if a.json {
            format!("{}\n", serde_json::to_string_pretty(&json).unwrap())
        } else if lines.is_empty() {
            String::new()
        } else {
            lines.join("\n") + "\n"
        });
    }
    let angles = match a.f {
        Some(f) => complete_angles(class, &given, f)?,
        None => given,
    };
    let mut set = enumerate_avc(class, &angles, a.max_degree).map_err(bad)?;
    set.f = a.f.or(set.f);
    Ok(if a.json {
        format!("{}\n", serde_json::to_string_pretty(&avc_json(&set)).unwrap())
    } else {
        format!("{}\n", combo_list(&set))
    })
}

fn read_document(file: &str, stdin: &mut dyn Read) -> Result<TilingDocument, AppError> {
    let mut text = String::new();
    if file == "-" {
        stdin.read_to_string(&mut text).map_err(|e| AppError::Input(format!("cannot read stdin: {e}")))?;
    } else {
        text = std::fs::read_to_string(file).map_err(|e| AppError::Input(format!("cannot read {file}: {e}")))?;
    }
    TilingDocument::from_json(&text).map_err(|e| AppError::Input(e.to_string()))
}

fn verify_cmd(a: VerifyArgs, stdin: &mut dyn Read, stdout: &mut dyn Write) -> Result<(), AppError> {
    let tol = tolerance(a.tol)?;
    let doc = read_document(&a.file, stdin)?;
    let report = match doc.realization() {
        Ok(r) => verify(&r, tol),
        Err(_) => verify_combinatorial(&doc.complex),
    };
    let _ = writeln!(stdout, "{report}");
    if report.pass {
        Ok(())
    } else {
        Err(AppError::Failure(format!("{} failed: {}", doc.name, report.failed().iter().map(|c| c.name.as_str()).collect::<Vec<_>>().join(", "))))
    }
}

fn tables_cmd(a: TablesArgs) -> Result<String, AppError> {
    let r = match a.table {
        Some(n) => tables::table(n as usize),
        None => tables::all_tables(),
    };
    r.map_err(|e| AppError::Failure(e.to_string()))
}
