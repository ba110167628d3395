//! Command-line front end.
//!
//! Exit codes: 0 for success or a verified claim, 1 when a claim is checked
//! and found false, 2 for usage, input-format and precondition errors.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::autgroup::automorphism_group;
use crate::error::{Error, Result};
use crate::hadamard::{paley_skew_hadamard, SignMatrix};
use crate::scheme::{
    doubled_scheme, scheme_from_skew_hadamard, verify_class2_products, AssociationScheme, RelationColoring,
};
use crate::schurian::{is_schurian, verify_main_theorem};
use crate::triples::{check_extremal_characterization, nu_extremes, require_doubled_scale, NuMode};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "skewdouble",
    version,
    about = "Skew-Hadamard doubling and class-2 association schemes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Paley skew-Hadamard matrix of order q+1 (.shm)
    Paley {
        #[arg(long)]
        q: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Doubling of a skew-Hadamard matrix (.shm -> .shm)
    Double {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Normalize and extract the class-2 scheme (.shm -> .asc)
    Extract {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Doubled scheme of order 2m+1 (.asc -> .asc)
    Doubled {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check the scheme axioms and the class-2 product identities
    Verify {
        #[arg(short, long)]
        input: PathBuf,
    },
    /// Triple intersection statistics of the out-neighbourhoods
    Nu {
        #[arg(short, long)]
        input: PathBuf,
        /// Enforce the extremal-triple characterization for doubled schemes
        #[arg(long = "assert-lemma1")]
        assert_extremal: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Automorphism group: generators, order, orbits
    Aut {
        #[arg(short, long)]
        input: PathBuf,
        /// Also write the bare generator list here
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Decide whether the scheme is schurian
    Schurian {
        #[arg(short, long)]
        input: PathBuf,
    },
    /// Run the full doubling theorem pipeline on a scheme of order >= 7
    Theorem {
        #[arg(short, long)]
        input: PathBuf,
    },
}

impl Command {
    fn verb(&self) -> &'static str {
        match self {
            Command::Paley { .. } => "paley",
            Command::Double { .. } => "double",
            Command::Extract { .. } => "extract",
            Command::Doubled { .. } => "doubled",
            Command::Verify { .. } => "verify",
            Command::Nu { .. } => "nu",
            Command::Aut { .. } => "aut",
            Command::Schurian { .. } => "schurian",
            Command::Theorem { .. } => "theorem",
        }
    }
}

/// Parses `args` (including the program name) and runs one command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let verb = cli.command.verb();
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "{verb}: {e}");
            EXIT_USAGE
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| std::io::Error::new(e.kind(), format!("{}: {e}", path.display())).into())
}

fn read_scheme(path: &Path) -> Result<AssociationScheme> {
    read(path)?.parse()
}

fn emit(text: &str, output: Option<&Path>, out: &mut dyn Write) -> Result<()> {
    match output {
        Some(p) => fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Paley { q, output } => {
            emit(&paley_skew_hadamard(q)?.to_string(), output.as_deref(), out)?;
            Ok(EXIT_OK)
        }
        Command::Double { input, output } => {
            let h: SignMatrix = read(&input)?.parse()?;
            emit(&h.double()?.to_string(), output.as_deref(), out)?;
            Ok(EXIT_OK)
        }
        Command::Extract { input, output } => {
            let h: SignMatrix = read(&input)?.parse()?;
            let x = scheme_from_skew_hadamard(&h.normalize()?)?;
            emit(&x.to_string(), output.as_deref(), out)?;
            Ok(EXIT_OK)
        }
        Command::Doubled { input, output } => {
            let y = doubled_scheme(&read_scheme(&input)?)?;
            emit(&y.to_string(), output.as_deref(), out)?;
            Ok(EXIT_OK)
        }
        Command::Verify { input } => verify(&input, out),
        Command::Nu {
            input,
            assert_extremal,
            output,
        } => {
            let y = read_scheme(&input)?;
            if assert_extremal {
                require_doubled_scale(y.order())?;
            }
            let report = nu_extremes(&y, NuMode::Survey)?;
            emit(&report.to_string(), output.as_deref(), out)?;
            if assert_extremal {
                if let Err(e) = check_extremal_characterization(&report) {
                    writeln!(out, "extremal_triples: FAIL {e}")?;
                    return Ok(EXIT_FALSE);
                }
            }
            Ok(EXIT_OK)
        }
        Command::Aut { input, output } => {
            let x = read_scheme(&input)?;
            let g = automorphism_group(&x)?;
            if let Some(p) = output.as_deref() {
                fs::write(p, g.to_string())?;
            }
            write!(out, "{g}")?;
            writeln!(out, "order {}", g.order())?;
            let orbits = g.orbits();
            writeln!(out, "orbits {}", orbits.len())?;
            for orbit in orbits {
                let line: Vec<String> = orbit.iter().map(usize::to_string).collect();
                writeln!(out, "{}", line.join(" "))?;
            }
            Ok(EXIT_OK)
        }
        Command::Schurian { input } => {
            let verdict = is_schurian(&read_scheme(&input)?)?;
            write!(out, "{verdict}")?;
            Ok(if verdict.is_schurian { EXIT_OK } else { EXIT_FALSE })
        }
        Command::Theorem { input } => {
            let report = verify_main_theorem(&read_scheme(&input)?)?;
            write!(out, "{report}")?;
            Ok(if report.verified() { EXIT_OK } else { EXIT_FALSE })
        }
    }
}

fn verify(input: &Path, out: &mut dyn Write) -> Result<i32> {
    let coloring: RelationColoring = read(input)?.parse()?;
    let x = match coloring.into_scheme() {
        Ok(x) => x,
        Err(Error::Axiom(e)) => {
            writeln!(out, "axioms: FAIL {e}")?;
            return Ok(EXIT_FALSE);
        }
        Err(e) => return Err(e),
    };
    writeln!(
        out,
        "axioms: PASS order={} class={} symmetric={} commutative={}",
        x.order(),
        x.class(),
        x.is_symmetric(),
        x.is_commutative()
    )?;
    if !x.is_non_symmetric_class2() {
        writeln!(out, "class2_products: SKIP not a non-symmetric class-2 scheme")?;
        return Ok(EXIT_OK);
    }
    let t = x.intersection_numbers();
    let (a11, a12) = (t.product(1, 1), t.product(1, 2));
    let ok = verify_class2_products(&x)?;
    writeln!(
        out,
        "class2_products: {} A1^2={}A1+{}A2 A1A2={}A0+{}A1+{}A2",
        if ok { "PASS" } else { "FAIL" },
        a11[1],
        a11[2],
        a12[0],
        a12[1],
        a12[2]
    )?;
    Ok(if ok { EXIT_OK } else { EXIT_FALSE })
}
