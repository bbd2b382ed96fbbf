use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use kleinmaps::census::{self, CensusFilters, CensusQuery, DEFAULT_CAP};
use kleinmaps::dart::{orient, to_blades};
use kleinmaps::io::{self, AnyMap};
use kleinmaps::normalize::{j_invariant, normalize_values};
use kleinmaps::triangle::schreier_data;
use kleinmaps::{BladeSystem, Error, Rational, SpherePoint, TriangleSignature};

#[derive(Parser)]
#[command(
    name = "kleinmaps",
    version,
    about = "Maps and hypermaps on compact Klein surfaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a map or dart file and print it in normal form.
    Validate {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Surface type, map type and passport.
    Invariants { file: PathBuf },
    /// Complex double: component maps and the deck involution.
    Double {
        file: PathBuf,
        /// Write component_<k>.json and deck.json here instead of printing.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Boundary components traced through fixed blades.
    Boundary { file: PathBuf },
    /// Convert between blade files and dart files.
    Convert {
        file: PathBuf,
        #[arg(long, value_enum)]
        to: Target,
    },
    /// Enumerate blade systems up to isomorphism.
    Census {
        #[arg(long)]
        max_n: usize,
        /// Three comma-separated periods l0,l1,linf; 0 means infinity.
        #[arg(long, default_value = "0,0,0")]
        signature: String,
        /// key=value with key one of orientable, boundary, genus_or_crosscaps, euler.
        /// Boundary accepts a range such as 1..3 or 1.. as well.
        #[arg(long = "filter", allow_hyphen_values = true)]
        filters: Vec<String>,
        /// Print only the number of systems.
        #[arg(long)]
        count: bool,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Coset representatives and stabiliser generators at a basepoint.
    Schreier {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        basepoint: usize,
    },
    /// Send a real critical-value set into {0, 1, inf}.
    Normalize {
        /// Comma-separated values such as 1/2, 3-2i, inf.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, num_args = 0..)]
        values: Vec<String>,
    },
    /// j-invariant of y^2 = 4x^3 - g2 x - g3.
    Jinv {
        #[arg(long, allow_hyphen_values = true)]
        g2: String,
        #[arg(long, allow_hyphen_values = true)]
        g3: String,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    Darts,
    Blades,
}

enum Failure {
    Domain(Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type Outcome = Result<String, Failure>;

fn read_text(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn read_system(path: &Path) -> Result<BladeSystem, Failure> {
    Ok(match io::read_any(&read_text(path)?)? {
        AnyMap::Blades(b) => b,
        AnyMap::Darts(d) => to_blades(&d),
    })
}

fn parse_signature(s: &str) -> Result<TriangleSignature, Failure> {
    let codes: Vec<u32> = s
        .split(',')
        .map(|t| t.trim().parse::<u32>())
        .collect::<Result<_, _>>()
        .map_err(|_| {
            Failure::Usage(format!(
                "bad signature {s:?}; expected three integers a,b,c"
            ))
        })?;
    let codes: [u32; 3] = codes
        .try_into()
        .map_err(|_| Failure::Usage(format!("bad signature {s:?}; expected three entries")))?;
    Ok(TriangleSignature::from_codes(codes))
}

fn parse_filters(items: &[String]) -> Result<CensusFilters, Failure> {
    let bad = |item: &str| Failure::Usage(format!("bad filter {item:?}"));
    let mut f = CensusFilters::default();
    for item in items {
        let (key, value) = item.split_once('=').ok_or_else(|| bad(item))?;
        match key.trim() {
            "orientable" => f.orientable = Some(value.parse().map_err(|_| bad(item))?),
            "genus_or_crosscaps" | "genus" | "crosscaps" => {
                f.genus_or_crosscaps = Some(value.parse().map_err(|_| bad(item))?)
            }
            "euler" => f.euler = Some(value.parse().map_err(|_| bad(item))?),
            "boundary" => {
                let range = match value.split_once("..") {
                    Some((lo, hi)) => {
                        let lo = lo.parse().map_err(|_| bad(item))?;
                        let hi = match hi.trim_start_matches('=') {
                            "" => usize::MAX,
                            h => h.parse().map_err(|_| bad(item))?,
                        };
                        lo..=hi
                    }
                    None => {
                        let b = value.parse().map_err(|_| bad(item))?;
                        b..=b
                    }
                };
                f.boundary = Some(range);
            }
            _ => return Err(bad(item)),
        }
    }
    Ok(f)
}

fn threads_from_env() -> Result<Option<usize>, Failure> {
    match std::env::var("KLEINMAPS_THREADS") {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(Failure::Usage(format!(
                "KLEINMAPS_THREADS must be a positive integer, got {v:?}"
            ))),
        },
        Err(_) => Ok(None),
    }
}

fn line(v: &Value) -> String {
    io::to_line(v)
}

fn run_census(
    max_n: usize,
    signature: &str,
    filters: &[String],
    count: bool,
    cap: usize,
    format: Format,
) -> Outcome {
    let q = CensusQuery::new(max_n, parse_signature(signature)?)
        .with_filters(parse_filters(filters)?)
        .with_cap(cap)
        .with_threads(threads_from_env()?);
    if count {
        return Ok(format!("{}\n", census::count(&q)?));
    }
    let mut out = String::new();
    match format {
        Format::Json => {
            for rec in census::enumerate(&q)? {
                out.push_str(&line(&io::census_record_value(&rec?)));
            }
        }
        Format::Table => {
            let mut counts: BTreeMap<_, u64> = BTreeMap::new();
            for rec in census::enumerate(&q)? {
                *counts.entry(rec?.surface).or_default() += 1;
            }
            out.push_str("euler\torientable\tboundary\tgenus_or_crosscaps\tsurface\tcount\n");
            for (s, c) in counts {
                out.push_str(&format!(
                    "{}\t{}\t{}\t{}\t{}\t{}\n",
                    s.euler,
                    s.orientable,
                    s.boundary,
                    s.genus_or_crosscaps,
                    s.name(),
                    c
                ));
            }
        }
        Format::Dot => {
            return Err(Failure::Usage(
                "census supports json and table output".into(),
            ))
        }
    }
    Ok(out)
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Validate { file, format } => {
            let parsed = io::read_any(&read_text(&file)?)?;
            match (format, parsed) {
                (Format::Json, AnyMap::Blades(b)) => Ok(io::write_map(&b)),
                (Format::Json, AnyMap::Darts(d)) => Ok(io::write_dart(&d)),
                (Format::Dot, AnyMap::Blades(b)) => Ok(io::to_dot(&b)),
                (Format::Dot, AnyMap::Darts(d)) => Ok(io::to_dot(&to_blades(&d))),
                (Format::Table, _) => Err(Failure::Usage(
                    "validate supports json and dot output".into(),
                )),
            }
        }
        Command::Invariants { file } => Ok(line(&io::invariants_value(&read_system(&file)?)?)),
        Command::Double { file, out_dir } => {
            let d = read_system(&file)?.complex_double();
            match out_dir {
                None => Ok(line(&io::double_value(&d))),
                Some(dir) => {
                    let write = |name: String, text: String| {
                        fs::write(dir.join(&name), text)
                            .map_err(|e| Failure::Usage(format!("cannot write {name}: {e}")))
                    };
                    fs::create_dir_all(&dir).map_err(|e| {
                        Failure::Usage(format!("cannot create {}: {e}", dir.display()))
                    })?;
                    for (k, c) in d.components.iter().enumerate() {
                        write(format!("component_{}.json", k + 1), io::write_map(c))?;
                    }
                    let deck = line(&io::deck_value(&d));
                    write("deck.json".into(), deck.clone())?;
                    Ok(deck)
                }
            }
        }
        Command::Boundary { file } => {
            Ok(line(&io::boundary_value(&read_system(&file)?.boundary())))
        }
        Command::Convert { file, to } => {
            let parsed = io::read_any(&read_text(&file)?)?;
            match (to, parsed) {
                (Target::Darts, AnyMap::Blades(b)) => Ok(io::write_dart(&orient(&b)?)),
                (Target::Blades, AnyMap::Darts(d)) => Ok(io::write_map(&to_blades(&d))),
                (Target::Darts, AnyMap::Darts(d)) => Ok(io::write_dart(&d)),
                (Target::Blades, AnyMap::Blades(b)) => Ok(io::write_map(&b)),
            }
        }
        Command::Census {
            max_n,
            signature,
            filters,
            count,
            cap,
            format,
        } => run_census(max_n, &signature, &filters, count, cap, format),
        Command::Schreier { file, basepoint } => {
            let b = read_system(&file)?;
            if basepoint == 0 {
                return Err(Failure::Usage("basepoint is 1-based".into()));
            }
            let s = schreier_data(&b.reflection_action(), basepoint - 1)?;
            Ok(line(&io::schreier_value(&s)))
        }
        Command::Normalize { values } => {
            let points = values
                .iter()
                .filter(|v| !v.trim().is_empty())
                .map(|v| v.parse::<SpherePoint>())
                .collect::<Result<Vec<_>, _>>()?;
            let n = normalize_values(&points)?;
            Ok(line(&io::certificate_value(&n)))
        }
        Command::Jinv { g2, g3 } => {
            let parse = |s: &str| {
                s.trim()
                    .parse::<Rational>()
                    .map_err(|_| Failure::Domain(Error::Parse(format!("bad rational {s:?}"))))
            };
            let j = j_invariant(&parse(&g2)?, &parse(&g3)?)?;
            Ok(line(&json!({"j": j.to_string()})))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.as_bytes()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(e)) => {
            eprintln!("{}", io::error_value(&e));
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("{}", json!({"error": "Usage", "message": msg}));
            ExitCode::from(2)
        }
    }
}
