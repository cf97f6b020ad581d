use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use threeone::harness::{
    enumerate_class_with, enumerate_simples_with, verify_with, Fault, TableFormat, VerifyOptions, DEFAULT_ENUM_LIMIT,
};
use threeone::perm::{first_violation, substitution_decompose, Permutation};
use threeone::series::{
    catalan_gf, d_series, gf_f, gf_g, simple_gf_closed, simple_gf_summation, PowerSeries, DEFAULT_ORDER,
};
use threeone::structure::{classify_simple, extrema_diagram, theorem_conditions, tile_types};

#[derive(Parser)]
#[command(name = "threeone", version, about = "Permutations avoiding 2341 and 4123: enumeration, structure and series")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Test membership in a class and show one occurrence on failure.
    Check {
        perm: Permutation,
        #[arg(long, default_value = "2341,4123", value_delimiter = ',')]
        basis: Vec<Permutation>,
    },
    /// Count class members of each length.
    Enumerate {
        #[arg(long, default_value = "2341,4123", value_delimiter = ',')]
        basis: Vec<Permutation>,
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        format: TableFormat,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Count simple class members of each length.
    Simples {
        #[arg(long, default_value = "2341,4123,3412", value_delimiter = ',')]
        basis: Vec<Permutation>,
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        format: TableFormat,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Substitution decomposition into a simple skeleton.
    Decompose {
        perm: Permutation,
        #[arg(long)]
        json: bool,
    },
    /// Category of a simple member, or structural diagnostics otherwise.
    Classify {
        perm: Permutation,
        #[arg(long)]
        json: bool,
    },
    /// Coefficients of a generating function.
    Series {
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
        #[arg(long)]
        json: bool,
    },
    /// Run every cross-check; exits non-zero if any fails.
    Verify {
        #[arg(long, default_value_t = DEFAULT_ENUM_LIMIT)]
        max_n: usize,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        json: bool,
        /// Corrupt the quadratic's constant coefficient in the residual check.
        #[arg(long, hide = true)]
        corrupt_p0: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    C,
    D,
    G,
    F,
    SimpleClosed,
    SimpleSum,
}

fn series_of(which: Which, order: usize) -> PowerSeries {
    match which {
        Which::C => catalan_gf(order),
        Which::D => d_series(order),
        Which::G => gf_g(order),
        Which::F => gf_f(order),
        Which::SimpleClosed => simple_gf_closed(order),
        Which::SimpleSum => simple_gf_summation(order),
    }
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn classify(p: &Permutation, as_json: bool) -> threeone::Result<()> {
    if let Ok(category) = classify_simple(p) {
        if as_json {
            println!("{}", json!({ "perm": p, "category": category }));
        } else {
            println!("{}", serde_json::to_value(category).expect("enum serializes").as_str().unwrap_or_default());
        }
        return Ok(());
    }
    let diagram = extrema_diagram(p)?;
    let conditions = (p.len() > 2).then(|| theorem_conditions(p)).transpose()?;
    let tiles = tile_types(p).ok();
    if as_json {
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "perm": p,
                "category": null,
                "extrema": diagram,
                "theorem_conditions": conditions,
                "tiles": tiles,
            }))
            .expect("json")
        );
        return Ok(());
    }
    println!("not a simple member of Av(2341, 4123) of length >= 4");
    println!("l-r maxima at positions {}", join(&diagram.lr_max_positions));
    println!("r-l minima at positions {}", join(&diagram.rl_min_positions));
    let infl: Vec<String> = diagram.inflections.iter().map(|i| format!("({},{})", i.x, i.y)).collect();
    println!("inflections {}", infl.join(" "));
    if let Some(c) = conditions {
        println!(
            "conditions: alternating {}, corners {}, pairs {}, partners {}, central {}",
            c.alternating_inflections, c.decreasing_corners, c.corner_pairs, c.unique_interlacing_partner, c.central_cells
        );
    }
    if let Some(t) = tiles {
        println!("tiles {}", join(&t));
    }
    Ok(())
}

fn run(cli: Cli) -> threeone::Result<ExitCode> {
    match cli.command {
        Command::Check { perm, basis } => match first_violation(&perm, &basis) {
            None => println!("{perm} is in Av({})", join(&basis)),
            Some((pattern, occ)) => {
                let positions: Vec<String> = occ.one_based().iter().map(ToString::to_string).collect();
                println!(
                    "{perm} contains {pattern} at positions {} (values {})",
                    positions.join(","),
                    join(&occ.values(&perm))
                );
            }
        },
        Command::Enumerate { basis, max_n, format, jobs } => {
            print!("{}", enumerate_class_with(&basis, max_n, jobs)?.render(format));
        }
        Command::Simples { basis, max_n, format, jobs } => {
            print!("{}", enumerate_simples_with(&basis, max_n, jobs)?.render(format));
        }
        Command::Decompose { perm, json } => {
            let d = substitution_decompose(&perm)?;
            if json {
                println!("{}", serde_json::to_string(&d).expect("json"));
            } else {
                println!("{}[{}]", d.skeleton, join(&d.parts));
            }
        }
        Command::Classify { perm, json } => classify(&perm, json)?,
        Command::Series { which, order, json } => {
            let s = series_of(which, order);
            if json {
                println!("{}", serde_json::to_string(&s).expect("json"));
            } else {
                println!("{}", join(s.coefficients()));
            }
        }
        Command::Verify { max_n, order, jobs, json, corrupt_p0 } => {
            let opts = VerifyOptions { n_enum: max_n, order, jobs, fault: corrupt_p0.then_some(Fault::CorruptP0) };
            let report = verify_with(&opts)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report).expect("json"));
            } else {
                print!("{}", report.to_text());
            }
            if !report.passed() {
                return Ok(ExitCode::FAILURE);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
