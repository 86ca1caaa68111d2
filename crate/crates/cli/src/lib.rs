//! Command dispatch for the `sqcoh` binary.
//!
//! Presentation arguments are file paths; `model:NAME` loads a bundled model
//! instead (`model:BPU4`, `model:BS1`, `model:P1`, `model:P1x4`).

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use sqcoh::{
    adem_normalize, apply_sq, check_table_consistency, kunneth_product, milnor_q, model_by_name,
    parse_presentation, quotient_by_ideal, verify_suite, GradedAlgebra, ModelId, Presentation,
    SqWord, DEFAULT_MAX_DEGREE,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "sqcoh",
    version,
    about = "Graded F2-algebras with Steenrod and Milnor operations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a basis of the quotient in one degree.
    Basis {
        file: String,
        #[arg(long)]
        degree: u32,
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_degree: u32,
    },
    /// Print the dimensions of degrees 0 through D.
    Poincare {
        file: String,
        #[arg(long)]
        through: u32,
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_degree: u32,
    },
    /// Print the normal form of a polynomial.
    Nf {
        file: String,
        poly: String,
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_degree: u32,
    },
    /// Apply Sq^I to a polynomial.
    Sq {
        file: String,
        i: u32,
        poly: String,
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_degree: u32,
    },
    /// Apply the Milnor operation Q_I to a polynomial.
    Q {
        file: String,
        i: u32,
        poly: String,
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_degree: u32,
    },
    /// Rewrite a word such as "Sq1 Sq2" in admissible form.
    Adem { word: String },
    /// Write the presentation of the tensor product of two algebras.
    Kunneth {
        file_a: String,
        file_b: String,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Write the presentation with extra relations.
    Quotient {
        file: String,
        /// Comma-separated polynomials to kill.
        #[arg(long, value_delimiter = ',')]
        kill: Vec<String>,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Compare the Steenrod table against the Adem relations.
    CheckTable {
        file: String,
        #[arg(long)]
        through: u32,
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_degree: u32,
    },
    /// Print a bundled presentation.
    Model { name: String },
    /// Replay the full verification suite.
    VerifyPaper {
        #[arg(long)]
        json: bool,
        /// Run against this presentation instead of the bundled BPU4 model.
        #[arg(long)]
        model: Option<String>,
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_degree: u32,
    },
}

struct Failure(i32, String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(EXIT_USAGE, format!("error: {e}\n"))
    }
}

/// Runs one invocation; `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return (status, e.render().to_string());
        }
    };
    let mut out = String::new();
    match dispatch(cli.command, &mut out) {
        Ok(status) => (status, out),
        Err(Failure(status, message)) => {
            out.push_str(&message);
            (status, out)
        }
    }
}

fn load(source: &str, out: &mut String) -> Result<Presentation, Failure> {
    let pres = match source.strip_prefix("model:") {
        Some(name) => model_by_name(name)?,
        None => {
            let text = fs::read_to_string(source)
                .map_err(|e| Failure(EXIT_USAGE, format!("error: cannot read {source}: {e}\n")))?;
            parse_presentation(&text)
                .map_err(|e| Failure(EXIT_USAGE, format!("error: {source}: {e}\n")))?
        }
    };
    for w in pres.warnings() {
        writeln!(out, "warning: {source}: {w}").unwrap();
    }
    Ok(pres)
}

fn write_output(text: &str, path: Option<&Path>, out: &mut String) -> Result<(), Failure> {
    match path {
        Some(path) => {
            fs::write(path, text).map_err(|e| {
                Failure(
                    EXIT_USAGE,
                    format!("error: cannot write {}: {e}\n", path.display()),
                )
            })?;
            writeln!(out, "wrote {}", path.display()).unwrap();
        }
        None => out.push_str(text),
    }
    Ok(())
}

fn dispatch(command: Command, out: &mut String) -> Result<i32, Failure> {
    match command {
        Command::Basis {
            file,
            degree,
            max_degree,
        } => {
            let alg = GradedAlgebra::new(load(&file, out)?, max_degree);
            let basis = alg.degree_basis(degree)?;
            writeln!(out, "degree {degree}: dimension {}", basis.dim()).unwrap();
            if basis.dim() == 0 {
                writeln!(out, "(empty)").unwrap();
            }
            for m in basis.basis_monomials() {
                writeln!(out, "{}", alg.presentation().format_monomial(&m)).unwrap();
            }
        }
        Command::Poincare {
            file,
            through,
            max_degree,
        } => {
            let alg = GradedAlgebra::new(load(&file, out)?, max_degree);
            let dims = alg.poincare_series(through)?;
            let dims: Vec<String> = dims.iter().map(ToString::to_string).collect();
            writeln!(out, "{}", dims.join(" ")).unwrap();
        }
        Command::Nf {
            file,
            poly,
            max_degree,
        } => {
            let alg = GradedAlgebra::new(load(&file, out)?, max_degree);
            let p = alg.parse(&poly)?;
            writeln!(out, "{}", alg.format(&alg.normal_form(&p)?)).unwrap();
        }
        Command::Sq {
            file,
            i,
            poly,
            max_degree,
        } => {
            let alg = GradedAlgebra::new(load(&file, out)?, max_degree);
            let p = alg.parse(&poly)?;
            writeln!(out, "{}", alg.format(&apply_sq(&alg, i, &p)?)).unwrap();
        }
        Command::Q {
            file,
            i,
            poly,
            max_degree,
        } => {
            let alg = GradedAlgebra::new(load(&file, out)?, max_degree);
            let p = alg.parse(&poly)?;
            writeln!(out, "{}", alg.format(&milnor_q(&alg, i, &p)?)).unwrap();
        }
        Command::Adem { word } => {
            let w: SqWord = word.parse()?;
            writeln!(out, "{}", adem_normalize(&w)).unwrap();
        }
        Command::Kunneth {
            file_a,
            file_b,
            output,
        } => {
            let a = load(&file_a, out)?;
            let b = load(&file_b, out)?;
            let (product, renames) = kunneth_product(&a, &b);
            for r in &renames {
                writeln!(out, "renamed {} -> {}", r.from, r.to).unwrap();
            }
            write_output(&product.to_text(), output.as_deref(), out)?;
        }
        Command::Quotient { file, kill, output } => {
            let pres = load(&file, out)?;
            let gens = kill
                .iter()
                .map(|p| pres.parse_poly(p))
                .collect::<Result<Vec<_>, _>>()?;
            let q = quotient_by_ideal(&pres, &gens)?;
            write_output(&q.to_text(), output.as_deref(), out)?;
        }
        Command::CheckTable {
            file,
            through,
            max_degree,
        } => {
            let alg = GradedAlgebra::new(load(&file, out)?, max_degree);
            let report = check_table_consistency(&alg, through)?;
            for v in &report.violations {
                writeln!(
                    out,
                    "violation: {} on {}: direct {} but admissible form gives {}",
                    v.word,
                    v.generator,
                    alg.format(&v.direct),
                    alg.format(&v.admissible)
                )
                .unwrap();
            }
            for s in &report.skipped {
                writeln!(
                    out,
                    "skipped: {} on {} ({})",
                    s.word, s.generator, s.missing
                )
                .unwrap();
            }
            writeln!(
                out,
                "{} checked, {} skipped, {} violations",
                report.checked,
                report.skipped.len(),
                report.violations.len()
            )
            .unwrap();
            if !report.is_consistent() {
                return Ok(EXIT_CHECK_FAILED);
            }
        }
        Command::Model { name } => {
            let id: ModelId = name.parse()?;
            out.push_str(id.text());
        }
        Command::VerifyPaper {
            json,
            model,
            max_degree,
        } => {
            let pres = match model {
                Some(source) => load(&source, out)?,
                None => sqcoh::bundled_model(ModelId::Bpu4),
            };
            let report = verify_suite(&pres, max_degree);
            if json {
                // warnings would corrupt the JSON document
                out.clear();
                out.push_str(&report.to_json());
                out.push('\n');
            } else {
                out.push_str(&report.to_text());
            }
            if !report.overall {
                return Ok(EXIT_CHECK_FAILED);
            }
        }
    }
    Ok(EXIT_OK)
}
