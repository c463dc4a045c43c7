use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use moddata::catalog::{pointed_zn, shipped_data, su2_4_family, su2_4_parameters, su2_odd_mod2, CatalogEntry};
use moddata::classifier::{default_rank5_entries, grothendieck_equiv, match_galois_case, rank5_suite};
use moddata::field_theory::{enumerate_levels, GroupShape};
use moddata::galois::{classify_dimensions, compute_profile};
use moddata::modular_data::{check_admissible, verlinde_fusion};
use moddata::sl2z_reps::{canonical_lift, normalize, spectra_connectivity, ModularRep};
use moddata::{Cyclotomic, ModularDatum};

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(name = "moddata", version, about = "Exact checks on modular data (S, T)")]
struct Cli {
    /// Machine-readable JSON on standard output.
    #[arg(long, global = true)]
    json: bool,
    /// Decimal digits for floating-point diagnostics (1 to 15).
    #[arg(long, global = true, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..=15))]
    precision: u32,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the seven admissibility conditions.
    Check { file: PathBuf },
    /// Print the fusion matrices from the Verlinde formula.
    Fusion { file: PathBuf },
    /// Galois action on the labels.
    Galois { file: PathBuf },
    /// Level, parity, t-spectrum and connectivity of a normalized lift.
    Rep(RepArgs),
    /// Candidate levels for a Galois group shape, e.g. `p=3,m=1,r=1` or `multiquadratic,m=2`.
    Levels { shape: String },
    /// Emit catalog data as JSON.
    Catalog {
        #[command(subcommand)]
        family: Family,
    },
    /// Run the rank-5 checks on the catalog or on the given files.
    #[command(name = "classify-rank5")]
    ClassifyRank5 { files: Vec<PathBuf> },
    /// Test two data files for equivalent fusion rules.
    Equiv { a: PathBuf, b: PathBuf },
}

#[derive(Args)]
struct RepArgs {
    file: PathBuf,
    /// Index k of the twelfth root x = e(k/12); the canonical lift if omitted.
    #[arg(long, value_parser = clap::value_parser!(u8).range(0..12))]
    x: Option<u8>,
    /// Index of the sixth root of the anomaly.
    #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..6))]
    zeta: u8,
}

#[derive(Subcommand)]
enum Family {
    /// SU(2)_{2p-1}/Z_2 with q = 2p+1 prime, Galois conjugated by `conj`.
    Su2OddMod2 {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        conj: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Pointed data on Z/n with twists e(m j^2 / n).
    Pointed {
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 1)]
        m: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Member `index` (0 to 15) of the rank-5 family with D^2 = 12.
    Su24 {
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..16))]
        index: u8,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Write every shipped datum into a directory.
    All { dir: PathBuf },
}

/// An error that ends the run with exit status 2. A finished report whose
/// predicates fail is `Ok(false)`, exit status 1.
struct Failure(String);

impl From<moddata::Error> for Failure {
    fn from(e: moddata::Error) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = Result<bool, Failure>;

fn load(path: &Path) -> Result<ModularDatum, Failure> {
    ModularDatum::load(path).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

/// Writes to standard output, ignoring a closed pipe.
fn print_out(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn emit(cli: &Cli, command: &str, body: Value, text: impl FnOnce() -> String) {
    if cli.json {
        let mut out = json!({ "schema_version": SCHEMA_VERSION, "command": command });
        if let (Value::Object(map), Value::Object(extra)) = (&mut out, body) {
            map.extend(extra);
        }
        print_out(&format!("{}\n", serde_json::to_string_pretty(&out).expect("serializable")));
    } else {
        print_out(&text());
    }
}

fn float(x: &Cyclotomic, digits: u32) -> String {
    let z = x.to_complex();
    let d = digits as usize;
    if z.im.abs() < 10f64.powi(-(digits as i32)) {
        format!("{:.d$}", z.re)
    } else {
        format!("{:.d$}{:+.d$}i", z.re, z.im)
    }
}

fn check(cli: &Cli, file: &Path) -> Outcome {
    let datum = load(file)?;
    let report = check_admissible(&datum);
    let d2 = datum.global_dim_sq();
    emit(
        cli,
        "check",
        json!({ "file": file, "rank": datum.rank(), "torder": datum.torder(), "global_dim_sq": d2.to_string(), "report": report }),
        || {
            let mut s = format!("rank {}, N = {}, D^2 = {} ~ {}\n", datum.rank(), datum.torder(), d2, float(&d2, cli.precision));
            for r in &report.results {
                let _ = writeln!(s, "{:<6} {:<5} {}", r.condition.label(), if r.verdict.passed() { "pass" } else { "FAIL" }, r.condition.summary());
                if let Some(w) = r.verdict.witness() {
                    let _ = writeln!(s, "       {w}");
                }
            }
            s
        },
    );
    Ok(report.passed())
}

fn fusion(cli: &Cli, file: &Path) -> Outcome {
    let datum = load(file)?;
    let f = verlinde_fusion(&datum)?;
    let r = f.rank();
    let matrices: Vec<Vec<Vec<u64>>> = (0..r).map(|i| f.matrix(i)).collect();
    emit(cli, "fusion", json!({ "file": file, "rank": r, "dual": f.dual(), "matrices": matrices }), || {
        let mut s = String::new();
        for (i, m) in matrices.iter().enumerate() {
            let _ = writeln!(s, "N_{i}:");
            for row in m {
                let cells: Vec<String> = row.iter().map(u64::to_string).collect();
                let _ = writeln!(s, "  {}", cells.join(" "));
            }
        }
        let _ = writeln!(s, "dual: {}", f.dual());
        s
    });
    Ok(true)
}

fn galois(cli: &Cli, file: &Path) -> Outcome {
    let datum = load(file)?;
    let profile = compute_profile(&datum)?;
    let dims = classify_dimensions(&datum, &profile)?;
    let image = profile.image();
    let homomorphism = profile.check_homomorphism();
    let abelian = profile.check_abelian();
    let ok = homomorphism.passed() && abelian.passed();
    let case = if datum.rank() == 5 { match_galois_case(&image) } else { None };
    emit(
        cli,
        "galois",
        json!({
            "file": file,
            "profile": profile,
            "image_order": image.len(),
            "rank5_case": case.as_ref().map(|(k, pi)| json!({ "index": k, "relabeling": pi })),
            "dimensions": dims,
            "homomorphism": homomorphism,
            "abelian": abelian,
        }),
        || {
            let mut s = format!("F_S has conductor {}\n", profile.field_conductor);
            for (k, p) in &profile.perms {
                let _ = writeln!(s, "  sigma_{k:<4} {p}");
            }
            let orbits: Vec<String> = profile.orbits.iter().map(|o| format!("{o:?}")).collect();
            let _ = writeln!(s, "orbits: {}", orbits.join(" "));
            let perms: Vec<String> = image.iter().map(ToString::to_string).collect();
            let _ = writeln!(s, "image ({} elements): {}", image.len(), perms.join(", "));
            if let Some((k, pi)) = &case {
                let _ = writeln!(s, "rank-5 case {} after relabeling by {pi}", k + 1);
            }
            let _ = writeln!(s, "dimensions: {:?} (FP column {})", dims.class, dims.fp_column);
            let _ = writeln!(s, "homomorphism: {homomorphism}\nabelian: {abelian}");
            s
        },
    );
    Ok(ok)
}

fn rep_json(rep: &ModularRep) -> Value {
    json!({
        "level": rep.level(),
        "parity": rep.parity(),
        "t": rep.t().iter().map(|x| [x.num(), x.den()]).collect::<Vec<_>>(),
        "s": rep.s().rows().iter().map(|row| row.iter().map(ToString::to_string).collect::<Vec<_>>()).collect::<Vec<_>>(),
    })
}

fn rep(cli: &Cli, args: &RepArgs) -> Outcome {
    let datum = load(&args.file)?;
    let rep = match args.x {
        Some(x) => normalize(&datum, x, args.zeta)?,
        None => canonical_lift(&datum)?,
    };
    let relations = rep.verify_relations()?;
    let connectivity = spectra_connectivity(&rep);
    let ok = relations.passed() && connectivity.passed();
    emit(
        cli,
        "rep",
        json!({ "file": args.file, "rep": rep_json(&rep), "relations": relations, "connectivity": connectivity }),
        || {
            let mut s = format!("level {}, {}\n", rep.level(), rep.parity());
            for (i, t) in rep.t().iter().enumerate() {
                let _ = writeln!(s, "  t_{i} = {t:<10} order {:<5} ~ {}", t.order(), float(&t.to_cyclotomic(), cli.precision));
            }
            let _ = writeln!(s, "relations: {relations}\nconnectivity: {connectivity}");
            s
        },
    );
    Ok(ok)
}

fn levels(cli: &Cli, shape: &str) -> Outcome {
    let shape: GroupShape = shape.parse()?;
    let levels = enumerate_levels(&shape)?;
    emit(cli, "levels", json!({ "shape": shape, "levels": levels }), || {
        levels.iter().map(|n| format!("{n}\n")).collect()
    });
    Ok(true)
}

fn write_datum(datum: &ModularDatum, output: Option<&Path>) -> Result<(), Failure> {
    match output {
        Some(path) => datum.save(path).map_err(|e| Failure(format!("{}: {e}", path.display()))),
        None => {
            print_out(&datum.to_json());
            Ok(())
        }
    }
}

fn catalog(family: &Family) -> Outcome {
    match family {
        Family::Su2OddMod2 { p, conj, output } => write_datum(&su2_odd_mod2(*p, *conj)?, output.as_deref())?,
        Family::Pointed { n, m, output } => write_datum(&pointed_zn(*n, *m)?, output.as_deref())?,
        Family::Su24 { index, output } => {
            let params = su2_4_parameters()[*index as usize];
            write_datum(&su2_4_family(params)?, output.as_deref())?
        }
        Family::All { dir } => {
            std::fs::create_dir_all(dir).map_err(|e| Failure(format!("{}: {e}", dir.display())))?;
            for entry in shipped_data()? {
                let path = dir.join(format!("{}.json", entry.name));
                write_datum(&entry.datum, Some(&path))?;
                eprintln!("wrote {}", path.display());
            }
        }
    }
    Ok(true)
}

fn classify_rank5(cli: &Cli, files: &[PathBuf]) -> Outcome {
    let entries = if files.is_empty() {
        default_rank5_entries()?
    } else {
        files
            .iter()
            .map(|f| {
                let name = f.file_stem().map_or_else(|| f.display().to_string(), |s| s.to_string_lossy().into_owned());
                Ok(CatalogEntry { name, datum: load(f)? })
            })
            .collect::<Result<_, Failure>>()?
    };
    if let Some(e) = entries.iter().find(|e| e.datum.rank() != 5) {
        return Err(Failure(format!("{} has rank {}", e.name, e.datum.rank())));
    }
    let report = rank5_suite(&entries)?;
    emit(cli, "classify-rank5", json!({ "passed": report.passed(), "report": report }), || {
        let mut s = String::new();
        for d in &report.data {
            let class = d.fusion_class.map_or("unidentified".to_string(), |c| c.to_string());
            let case = d.galois_case.map_or("0 fixed".to_string(), |k| format!("case {}", k + 1));
            let _ = writeln!(s, "{:<18} {:<5} fusion {class}; Galois {case}", d.name, if d.passed() { "pass" } else { "FAIL" });
            for p in d.failures() {
                let _ = writeln!(s, "    {}: {}", p.name, p.verdict);
            }
        }
        for c in &report.not_instantiated {
            let _ = writeln!(s, "not instantiated: {c}");
        }
        s
    });
    Ok(report.passed())
}

fn equiv(cli: &Cli, a: &Path, b: &Path) -> Outcome {
    let fa = verlinde_fusion(&load(a)?)?;
    let fb = verlinde_fusion(&load(b)?)?;
    let witness = grothendieck_equiv(&fa, &fb)?;
    emit(cli, "equiv", json!({ "a": a, "b": b, "equivalent": witness.is_some(), "witness": witness }), || match &witness {
        Some(p) => format!("{}\n", p.images().iter().map(usize::to_string).collect::<Vec<_>>().join(" ")),
        None => "inequivalent\n".into(),
    });
    Ok(witness.is_some())
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Check { file } => check(cli, file),
        Command::Fusion { file } => fusion(cli, file),
        Command::Galois { file } => galois(cli, file),
        Command::Rep(args) => rep(cli, args),
        Command::Levels { shape } => levels(cli, shape),
        Command::Catalog { family } => catalog(family),
        Command::ClassifyRank5 { files } => classify_rank5(cli, files),
        Command::Equiv { a, b } => equiv(cli, a, b),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
