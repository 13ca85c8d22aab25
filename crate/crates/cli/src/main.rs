mod report;

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write as _};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use nalg_core::algebra::{annihilator, classify, gi_check};
use nalg_core::catalog;
use nalg_core::cogebra::classify_cogebra;
use nalg_core::duality::{dualize_algebra, dualize_cogebra};
use nalg_core::expr::parse_ga_expr;
use nalg_core::format::{parse_algebra, parse_cogebra, print_algebra, Document};
use nalg_core::products::{convolution_algebra, convolution_hypotheses, tensor_algebras};
use nalg_core::sym3::{maschke_multiplicities, orbit, orbit_span, Perm3, SubgroupId};
use nalg_core::{BangReading, Error};

#[derive(Parser)]
#[command(
    name = "nalg",
    version,
    about = "Σ₃-associative algebras and cogebras over ℚ"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify an algebra or cogebra file.
    Check {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Write the dual cogebra of an algebra, or the dual algebra of a cogebra.
    Dualize {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Write the tensor product of two algebras.
    Tensor {
        left: PathBuf,
        right: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Write the convolution algebra Hom(C, A) and report the G_i checks.
    Convolve {
        cogebra: PathBuf,
        algebra: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        /// Read the G_i^! cogebra identity without normalization.
        #[arg(long)]
        literal_bang: bool,
    },
    /// The subspace of v in ℚ[Σ₃] with A_μ∘Φ_v = 0.
    Annihilator {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Group-algebra computations on an expression such as "id - t12".
    S3 {
        #[command(subcommand)]
        command: S3Command,
    },
    /// The built-in example catalog.
    Catalog {
        #[command(subcommand)]
        command: CatalogCommand,
    },
}

#[derive(Subcommand)]
enum S3Command {
    /// The six translates σ⁻¹∘v.
    Orbit { expr: String },
    /// Dimension and basis of the orbit span F_v.
    Span { expr: String },
    /// Maschke multiplicities of F_v.
    Decompose { expr: String },
}

#[derive(Subcommand)]
enum CatalogCommand {
    List,
    Emit {
        name: String,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Rebuild every instance and compare with the committed files.
    Regen,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn load(path: &Path) -> Result<Document> {
    Document::parse(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn run(cli: Cli, out: &mut String) -> Result<ExitCode> {
    match cli.command {
        Command::Check { file, json } => {
            let text = match load(&file)? {
                Document::Algebra(a) if json => report::algebra_json(&classify(&a)),
                Document::Algebra(a) => report::algebra_text(&classify(&a)),
                Document::Cogebra(c) if json => report::cogebra_json(&classify_cogebra(&c)),
                Document::Cogebra(c) => report::cogebra_text(&classify_cogebra(&c)),
            };
            out.push_str(&text);
        }
        Command::Dualize { file, output } => {
            let dual = match load(&file)? {
                Document::Algebra(a) => Document::Cogebra(dualize_algebra(&a)),
                Document::Cogebra(c) => Document::Algebra(dualize_cogebra(&c)),
            };
            write(&output, &dual.print())?;
        }
        Command::Tensor {
            left,
            right,
            output,
        } => {
            let a = parse_algebra(&read(&left)?).with_context(|| left.display().to_string())?;
            let b = parse_algebra(&read(&right)?).with_context(|| right.display().to_string())?;
            write(&output, &print_algebra(&tensor_algebras(&a, &b)))?;
        }
        Command::Convolve {
            cogebra,
            algebra,
            output,
            literal_bang,
        } => {
            let c =
                parse_cogebra(&read(&cogebra)?).with_context(|| cogebra.display().to_string())?;
            let a =
                parse_algebra(&read(&algebra)?).with_context(|| algebra.display().to_string())?;
            let (reading, label) = if literal_bang {
                (BangReading::Literal, "literal")
            } else {
                (BangReading::Normalized, "normalized")
            };
            let hom = convolution_algebra(&c, &a);
            let hypotheses = convolution_hypotheses(&c, &a, reading);
            writeln!(
                out,
                "convolution algebra, dim {} ({label} reading)",
                hom.dim()
            )?;
            for i in SubgroupId::ALL {
                writeln!(
                    out,
                    "  {i} {:<24}hypothesis {:<4}result {}",
                    i.family(),
                    report::yes_no(hypotheses.contains(&i)),
                    report::yes_no(gi_check(&hom, i))
                )?;
            }
            write(&output, &print_algebra(&hom))?;
        }
        Command::Annihilator { file, json } => {
            let a = match load(&file)? {
                Document::Algebra(a) => a,
                Document::Cogebra(_) => bail!("annihilator expects an algebra file"),
            };
            let ann = annihilator(&a);
            let basis = report::subspace_elements(&ann);
            if json {
                out.push_str(&report::annihilator_to_json(ann.dim(), &basis));
            } else {
                out.push_str(&report::annihilator_text(ann.dim(), &basis));
            }
        }
        Command::S3 { command } => match command {
            S3Command::Orbit { expr } => {
                let v = parse_ga_expr(&expr)?;
                for (sigma, w) in Perm3::ALL.iter().zip(orbit(&v)) {
                    writeln!(out, "{:<3} {w}", sigma.name())?;
                }
            }
            S3Command::Span { expr } => {
                let s = orbit_span(&parse_ga_expr(&expr)?);
                writeln!(out, "dim {}", s.dim())?;
                for w in report::subspace_elements(&s) {
                    writeln!(out, "  {w}")?;
                }
            }
            S3Command::Decompose { expr } => {
                let m = maschke_multiplicities(&orbit_span(&parse_ga_expr(&expr)?))?;
                writeln!(out, "trivial {}", m.trivial)?;
                writeln!(out, "sign {}", m.sign)?;
                writeln!(out, "standard {}", m.standard)?;
            }
        },
        Command::Catalog { command } => match command {
            CatalogCommand::List => {
                for e in catalog::entries() {
                    let kind = match e.load() {
                        Document::Algebra(_) => "algebra",
                        Document::Cogebra(_) => "cogebra",
                    };
                    writeln!(out, "{:<18}{:<9}{}", e.name, kind, e.summary)?;
                }
            }
            CatalogCommand::Emit { name, output } => {
                write(&output, catalog::entry(&name)?.text())?;
            }
            CatalogCommand::Regen => {
                let start = Instant::now();
                match catalog::regenerate() {
                    Ok(names) => {
                        for name in names {
                            writeln!(out, "reproduced {name}")?;
                        }
                        writeln!(out, "all instances reproduced in {:.2?}", start.elapsed())?;
                    }
                    Err(Error::CatalogDivergence(names)) => {
                        for name in names {
                            eprintln!("diverged {name}");
                        }
                        return Ok(ExitCode::from(1));
                    }
                    Err(e) => return Err(e.into()),
                }
            }
        },
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let code = match run(cli, &mut out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    };
    match io::stdout().lock().write_all(out.as_bytes()) {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => {
            eprintln!("error: writing output: {e}");
            ExitCode::from(2)
        }
        _ => code,
    }
}
