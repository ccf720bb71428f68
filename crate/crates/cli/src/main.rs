//! `coiso`: validate ingredient lists and report their invariants.
//!
//! Exit codes: 0 success, 1 negative result, 2 unreadable or malformed input,
//! 3 failed precondition. Set `COISO_LOG=debug` for diagnostics.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use coiso::ingredients::{parse, validate, IngredientList};
use coiso::invariants::{lists_equal, report, splitting, Splitting};
use coiso::linalg::{format_rational, Int, IntegerLattice};
use coiso::orbitspace::{decompose, lineality, orbit_space_of, parse_space};
use coiso::torus::Subtorus;
use coiso::Error;
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "coiso",
    version,
    about = "Exact invariants of coisotropic torus actions"
)]
struct Cli {
    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check every condition of an ingredient list.
    Validate { file: PathBuf },
    /// Print all invariants of one or more lists.
    Report {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// `auto` or a JSON file holding the integer columns of a complement lattice.
        #[arg(long, default_value = "auto")]
        complement: String,
    },
    /// Decide whether two lists describe the same manifold.
    Compare { a: PathBuf, b: PathBuf },
    /// Find a complement carrying the curvature, or certify that none exists.
    Split { file: PathBuf },
    /// Split a polyhedral space (or the orbit space of a list) into polytope and lineality.
    Decompose { file: PathBuf },
}

/// Failure of one command, with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::Schema(_)) { 2 } else { 3 };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type Outcome = Result<(u8, String), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure {
        code: 2,
        message: format!("{}: {e}", path.display()),
    })
}

fn with_path<T>(path: &Path, r: coiso::Result<T>) -> Result<T, Failure> {
    r.map_err(|e| {
        let mut f = Failure::from(e);
        f.message = format!("{}: {}", path.display(), f.message);
        f
    })
}

fn load(path: &Path) -> Result<IngredientList, Failure> {
    let text = read(path)?;
    with_path(path, parse(&text))
}

/// Fails with exit code 3 unless every condition holds.
fn require_valid(path: &Path, list: &IngredientList) -> Result<(), Failure> {
    let r = with_path(path, validate(list))?;
    if r.all_pass() {
        return Ok(());
    }
    let failed: Vec<String> = r
        .items()
        .iter()
        .filter(|(_, v)| !v.is_pass())
        .map(|(name, v)| format!("{name}: {v}"))
        .collect();
    Err(Failure {
        code: 3,
        message: format!(
            "{}: not a valid list; {}",
            path.display(),
            failed.join("; ")
        ),
    })
}

fn json_text(v: serde_json::Value) -> String {
    serde_json::to_string_pretty(&v).expect("json") + "\n"
}

fn cmd_validate(file: &Path, as_json: bool) -> Outcome {
    let list = load(file)?;
    let r = with_path(file, validate(&list))?;
    let code = if r.all_pass() { 0 } else { 1 };
    let out = if as_json {
        let items: serde_json::Map<String, serde_json::Value> = r
            .items()
            .iter()
            .map(|(name, v)| (name.to_string(), json!(v.to_string())))
            .collect();
        json_text(json!({ "valid": r.all_pass(), "conditions": items }))
    } else {
        r.to_string()
    };
    Ok((code, out))
}

fn load_complement(path: &Path, d: usize) -> Result<Subtorus, Failure> {
    let text = read(path)?;
    let cols: Vec<Vec<i64>> = serde_json::from_str(&text).map_err(|e| Failure {
        code: 2,
        message: format!(
            "{}: expected an array of integer columns: {e}",
            path.display()
        ),
    })?;
    if cols.iter().any(|c| c.len() != d) {
        return Err(Failure {
            code: 2,
            message: format!("{}: complement columns need length {d}", path.display()),
        });
    }
    let vectors = cols
        .iter()
        .map(|c| c.iter().map(|&x| Int::from(x)).collect())
        .collect();
    let lattice = IntegerLattice::from_vectors(d, vectors);
    if lattice.rank() != cols.len() {
        return Err(Failure {
            code: 2,
            message: format!(
                "{}: complement columns are linearly dependent",
                path.display()
            ),
        });
    }
    with_path(path, Subtorus::new(lattice))
}

fn report_one(file: &Path, complement: &str, as_json: bool) -> Outcome {
    let list = load(file)?;
    require_valid(file, &list)?;
    let t_f = if complement == "auto" {
        None
    } else {
        Some(load_complement(Path::new(complement), list.torus_dim())?)
    };
    let r = with_path(file, report(&list, t_f.as_ref()))?;
    let out = if as_json {
        json_text(r.to_json())
    } else {
        r.to_string()
    };
    Ok((0, out))
}

fn cmd_report(files: &[PathBuf], complement: &str, as_json: bool) -> Outcome {
    let results: Vec<Outcome> = std::thread::scope(|s| {
        let handles: Vec<_> = files
            .iter()
            .map(|f| s.spawn(move || report_one(f, complement, as_json)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("report thread"))
            .collect()
    });
    // Input errors take precedence so that nothing is printed for bad input.
    if let Some(Err(f)) = results.iter().find(|r| matches!(r, Err(f) if f.code == 2)) {
        return Err(Failure {
            code: f.code,
            message: f.message.clone(),
        });
    }
    let mut out = String::new();
    let mut errors = Vec::new();
    for (file, r) in files.iter().zip(results) {
        match r {
            Ok((_, text)) if files.len() == 1 => out.push_str(&text),
            Ok((_, text)) => {
                writeln!(out, "== {} ==", file.display()).unwrap();
                out.push_str(&text);
            }
            Err(f) => errors.push(f),
        }
    }
    if let Some(first) = errors.into_iter().next() {
        return Err(first);
    }
    Ok((0, out))
}

fn cmd_compare(a: &Path, b: &Path, as_json: bool) -> Outcome {
    let la = load(a)?;
    let lb = load(b)?;
    require_valid(a, &la)?;
    require_valid(b, &lb)?;
    let equal = lists_equal(&la, &lb)?;
    let out = if as_json {
        json_text(json!({ "equal": equal }))
    } else if equal {
        "equal\n".to_string()
    } else {
        "different\n".to_string()
    };
    Ok((if equal { 0 } else { 1 }, out))
}

fn cmd_split(file: &Path, as_json: bool) -> Outcome {
    let list = load(file)?;
    require_valid(file, &list)?;
    let s = with_path(file, splitting(&list))?;
    let cols = |t: &Subtorus| -> Vec<Vec<String>> {
        t.basis()
            .cols_vec()
            .iter()
            .map(|c| c.iter().map(ToString::to_string).collect())
            .collect()
    };
    let (code, out) = match &s {
        Splitting::Feasible { t_f, .. } if as_json => (
            0,
            json_text(json!({ "feasible": true, "t_f_lattice": cols(t_f) })),
        ),
        Splitting::Feasible { t_f, .. } => {
            let c: Vec<String> = cols(t_f)
                .iter()
                .map(|c| format!("({})", c.join(", ")))
                .collect();
            (0, format!("feasible\nt_f basis: [{}]\n", c.join(", ")))
        }
        Splitting::Infeasible {
            pair,
            component,
            a,
            b,
        } if as_json => (
            1,
            json_text(json!({
                "feasible": false,
                "pair": [pair.0, pair.1],
                "component": component,
                "a": a.to_string(),
                "b": b.iter().map(ToString::to_string).collect::<Vec<_>>(),
            })),
        ),
        Splitting::Infeasible {
            pair,
            component,
            a,
            b,
        } => {
            let b: Vec<String> = b.iter().map(ToString::to_string).collect();
            (
                1,
                format!(
                    "infeasible\ncertificate: component {component} of c({},{}) is {a}, but its complement part ({}) cannot produce it with an integral shift\n",
                    pair.0,
                    pair.1,
                    b.join(", ")
                ),
            )
        }
    };
    Ok((code, out))
}

fn fmt_vec(v: &[coiso::linalg::Rational]) -> String {
    format!(
        "({})",
        v.iter().map(format_rational).collect::<Vec<_>>().join(", ")
    )
}

fn cmd_decompose(file: &Path, as_json: bool) -> Outcome {
    let text = read(file)?;
    let is_space = serde_json::from_str::<serde_json::Value>(&text)
        .ok()
        .and_then(|v| v.as_object().map(|o| o.contains_key("forms")))
        .unwrap_or(false);
    if !is_space {
        let list = with_path(file, parse(&text))?;
        require_valid(file, &list)?;
        let (delta, rank) = orbit_space_of(&list);
        let out = if as_json {
            let vs: Vec<Vec<String>> = delta
                .vertices()
                .iter()
                .map(|v| v.iter().map(format_rational).collect())
                .collect();
            json_text(json!({ "delta_vertices": vs, "torus_rank": rank }))
        } else {
            format!(
                "orbit space: delta x torus of rank {rank}\ndelta: {}\n",
                delta.to_text()
            )
        };
        return Ok((0, out));
    }
    let space = with_path(file, parse_space(&text))?;
    let dec = with_path(file, decompose(&space))?;
    let lin = lineality(&space);
    let out = if as_json {
        let strs =
            |v: &[coiso::linalg::Rational]| v.iter().map(format_rational).collect::<Vec<_>>();
        json_text(json!({
            "lineality": lin.basis_vectors().iter().map(|v| strs(v)).collect::<Vec<_>>(),
            "complement_coordinates": dec.coordinates,
            "forms": dec.forms.iter().map(|v| strs(v)).collect::<Vec<_>>(),
            "offsets": strs(&dec.offsets),
            "compact": dec.compact,
            "cocompact": dec.cocompact,
            "vertices": dec.vertices.iter().map(|v| strs(v)).collect::<Vec<_>>(),
            "unbounded_direction": dec.unbounded_direction.as_ref().map(|v| strs(v)),
        }))
    } else {
        let mut s = String::new();
        let basis: Vec<String> = lin.basis_vectors().iter().map(|v| fmt_vec(v)).collect();
        writeln!(s, "lineality: span[{}]", basis.join(", ")).unwrap();
        let coords: Vec<String> = dec
            .coordinates
            .iter()
            .map(|i| format!("x{}", i + 1))
            .collect();
        writeln!(s, "complement coordinates: [{}]", coords.join(", ")).unwrap();
        for (f, c) in dec.forms.iter().zip(&dec.offsets) {
            writeln!(s, "delta: {} . x >= {}", fmt_vec(f), format_rational(c)).unwrap();
        }
        writeln!(s, "compact: {}", dec.compact).unwrap();
        if dec.compact {
            let vs: Vec<String> = dec.vertices.iter().map(|v| fmt_vec(v)).collect();
            writeln!(s, "vertices: [{}]", vs.join(", ")).unwrap();
        }
        if let Some(r) = &dec.unbounded_direction {
            writeln!(s, "recession direction: {}", fmt_vec(r)).unwrap();
        }
        writeln!(s, "periods span lineality: {}", dec.cocompact).unwrap();
        s
    };
    Ok((0, out))
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("COISO_LOG", "warn")).init();
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Validate { file } => cmd_validate(file, cli.json),
        Command::Report { files, complement } => cmd_report(files, complement, cli.json),
        Command::Compare { a, b } => cmd_compare(a, b, cli.json),
        Command::Split { file } => cmd_split(file, cli.json),
        Command::Decompose { file } => cmd_decompose(file, cli.json),
    };
    match result {
        Ok((code, out)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
