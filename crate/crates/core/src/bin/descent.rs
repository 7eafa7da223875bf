use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use descent::algebra::DescentAlgebra;
use descent::classifier::{cross_check, CrossCheckStatus, Whitelist};
use descent::coxeter::{BuildOptions, CoxeterType, Family, DEFAULT_BUDGET};
use descent::error::{Error, Result};
use descent::export;
use descent::field::Characteristic;
use descent::fixture::{verify, QuiverFixture};
use descent::rep::summarize;

#[derive(Parser)]
#[command(name = "descent", version, about = "Descent algebras of finite Coxeter groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the group and store its structure constants.
    Build(Target),
    /// Table of marks of the parabolic subgroups.
    Marks(Output),
    /// Cartan matrix in characteristic p.
    Cartan(Modular),
    /// Ext-quiver in characteristic p.
    Extquiver(Modular),
    /// Representation type, with the certificate that supports it.
    Classify(Modular),
    /// Radical layers and simple modules in characteristic p.
    Report(Modular),
    /// Check quiver fixture files against computed Ext-quivers.
    VerifyFixture(FixtureArgs),
}

#[derive(Args)]
struct CacheArgs {
    /// Cache directory [default: $DESCENT_CACHE, otherwise no cache].
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    /// Ignore and overwrite cached data.
    #[arg(long, global = true)]
    no_cache: bool,
    /// Lift the element budget (needed for E7).
    #[arg(long, global = true)]
    allow_large: bool,
}

#[derive(Args)]
struct Target {
    /// Family letter: A, B, D, E, F, H or I.
    #[arg(long = "type")]
    family: Family,
    /// Rank; for the dihedral family I, the bond label m.
    #[arg(long)]
    rank: usize,
    #[command(flatten)]
    cache: CacheArgs,
}

#[derive(Args)]
struct Output {
    #[command(flatten)]
    target: Target,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Write the artifact into this directory instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct Modular {
    #[command(flatten)]
    output: Output,
    /// Characteristic: 0 or a prime.
    #[arg(long, default_value = "0")]
    p: Characteristic,
}

#[derive(Args)]
struct FixtureArgs {
    /// Fixture files.
    #[arg(required = true)]
    files: Vec<PathBuf>,
    #[command(flatten)]
    cache: CacheArgs,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
    Magma,
}

impl Format {
    fn extension(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
            Format::Magma => "txt",
        }
    }
}

impl CacheArgs {
    fn options(&self) -> Result<BuildOptions> {
        let cache_dir = self.cache.clone().or_else(|| std::env::var_os("DESCENT_CACHE").map(PathBuf::from));
        if self.no_cache {
            if let Some(dir) = &cache_dir {
                clear_cache(dir)?;
            }
        }
        Ok(BuildOptions { budget: DEFAULT_BUDGET, allow_large: self.allow_large, cache_dir })
    }
}

/// `--no-cache` forces a rebuild: drop stale files so the fresh ones replace them.
fn clear_cache(dir: &Path) -> Result<()> {
    if !dir.is_dir() {
        return Ok(());
    }
    for entry in std::fs::read_dir(dir)? {
        let path = entry?.path();
        let name = path.file_name().and_then(|n| n.to_str()).unwrap_or("");
        if name.ends_with(".dwb") || name.ends_with(".constants.jsonl") {
            std::fs::remove_file(path)?;
        }
    }
    Ok(())
}

impl Target {
    fn coxeter_type(&self) -> Result<CoxeterType> {
        CoxeterType::new(self.family, self.rank)
    }

    fn algebra(&self) -> Result<(CoxeterType, DescentAlgebra)> {
        let ty = self.coxeter_type()?;
        Ok((ty, DescentAlgebra::load(ty, &self.cache.options()?)?))
    }
}

impl Output {
    fn emit(&self, ty: CoxeterType, stem: &str, body: &str) -> Result<()> {
        match &self.out {
            Some(dir) => {
                std::fs::create_dir_all(dir)?;
                let path = dir.join(format!("{}_{stem}.{}", ty.tag(), self.format.extension()));
                std::fs::write(&path, body)?;
                println!("{}", path.display());
            }
            None => print!("{body}"),
        }
        Ok(())
    }
}

fn json<T: serde::Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn labels(alg: &DescentAlgebra) -> Vec<String> {
    let listing = alg.listing();
    (0..listing.len()).map(|i| listing.label(i).to_string()).collect()
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Build(target) => {
            let (ty, alg) = target.algebra()?;
            println!("{ty}: order {}, {} parabolic classes, dimension {}", ty.order(), alg.listing().len(), alg.dim());
        }
        Command::Marks(out) => {
            let (ty, alg) = out.target.algebra()?;
            let names = labels(&alg);
            let marks = alg.marks();
            let body = match out.format {
                Format::Json => json(&serde_json::json!({ "type": ty.name(), "labels": names, "marks": marks }))?,
                _ => export::matrix_csv(&names, &names, &marks),
            };
            out.emit(ty, "marks", &body)?;
        }
        Command::Cartan(m) => {
            let (ty, alg) = m.output.target.algebra()?;
            let s = summarize(&alg, m.p)?;
            let names = s.quiver.labels().to_vec();
            let body = match m.output.format {
                Format::Json => json(&serde_json::json!({
                    "type": ty.name(), "p": m.p.value(), "labels": names, "cartan": s.cartan
                }))?,
                _ => export::matrix_csv(&names, &names, &s.cartan),
            };
            m.output.emit(ty, &format!("cartan_p{}", m.p), &body)?;
        }
        Command::Extquiver(m) => {
            let (ty, alg) = m.output.target.algebra()?;
            let q = descent::rep::ext_quiver(&alg, m.p)?;
            let body = match m.output.format {
                Format::Csv => export::quiver_csv(&q),
                Format::Magma => export::quiver_triples(&q),
                Format::Json => json(&serde_json::json!({
                    "type": ty.name(), "p": m.p.value(), "labels": q.labels(), "triples": q.triples()
                }))?,
            };
            m.output.emit(ty, &format!("extquiver_p{}", m.p), &body)?;
        }
        Command::Classify(m) => {
            let (ty, alg) = m.output.target.algebra()?;
            let s = summarize(&alg, m.p)?;
            let report = cross_check(ty, &s, alg.dim(), &Whitelist::shipped())?;
            let body = match m.output.format {
                Format::Json => json(&report)?,
                _ => format!("{report}\n"),
            };
            m.output.emit(ty, &format!("classify_p{}", m.p), &body)?;
            if report.status == CrossCheckStatus::Conflict {
                return Err(Error::Inconsistency(format!("{ty} p={}: certificate contradicts lookup", m.p)));
            }
        }
        Command::Report(m) => {
            let (ty, alg) = m.output.target.algebra()?;
            let s = summarize(&alg, m.p)?;
            m.output.emit(ty, &format!("report_p{}", m.p), &json(&s)?)?;
        }
        Command::VerifyFixture(args) => {
            let opts = args.cache.options()?;
            let mut failed = 0;
            for path in &args.files {
                let f = QuiverFixture::load(path)?;
                for (p, outcome) in verify(&f, &opts)? {
                    failed += usize::from(!outcome.is_match());
                    println!("{} p={p}: {outcome}", f.source);
                }
            }
            if failed > 0 {
                return Err(Error::Inconsistency(format!("{failed} fixture checks failed")));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(64) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("descent: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
