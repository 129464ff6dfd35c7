use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use rouquier::radical::{quotient_label, rad_polynomial_quotients, radical_series_quotients};
use rouquier::{
    core_and_quotient, from_core_and_quotient, is_prime, lr_coefficient, rouquier_core, to_abacus,
    verify_hom_dimension, BlockLabel, Error, Partition,
};

#[derive(Parser, Debug)]
#[command(
    name = "rouquier",
    version,
    about = "Partition, abacus and radical-series computations for Rouquier blocks"
)]
struct Cli {
    /// Print JSON instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads for block scans (0 = all cores)
    #[arg(long, global = true, env = "ROUQUIER_THREADS", default_value_t = 0)]
    threads: usize,

    /// Also write the JSON report to this file
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// p-core, p-quotient and weight of a partition
    CoreQuotient {
        #[arg(long, value_parser = parse_prime)]
        p: u32,
        #[arg(long)]
        partition: Partition,
    },
    /// Bead diagram of a partition
    Abacus {
        #[arg(long, value_parser = parse_prime)]
        p: u32,
        #[arg(long)]
        partition: Partition,
    },
    /// Littlewood-Richardson coefficient c(outer; inner, content)
    Lr {
        #[arg(long)]
        outer: Partition,
        #[arg(long)]
        inner: Partition,
        #[arg(long)]
        content: Partition,
    },
    /// Partition of the Rouquier block with a given quotient
    Build {
        #[arg(long, value_parser = parse_prime)]
        p: u32,
        #[arg(long)]
        w: usize,
        #[arg(long)]
        quotient: Quotient,
    },
    /// Radical polynomial of S(lambda) against D(sigma)
    Radpoly {
        #[arg(long, value_parser = parse_prime)]
        p: u32,
        #[arg(long)]
        w: usize,
        #[arg(long)]
        lambda_quotient: Quotient,
        #[arg(long)]
        sigma_quotient: Quotient,
        /// Print the full partitions as well
        #[arg(long)]
        expand: bool,
    },
    /// Radical layers of S(lambda)
    Radseries {
        #[arg(long, value_parser = parse_prime)]
        p: u32,
        #[arg(long)]
        w: usize,
        #[arg(long)]
        lambda_quotient: Quotient,
        /// Label simples by full partition
        #[arg(long)]
        expand: bool,
    },
    /// Certify dim Hom(S^gamma, S^epsilon) = k for the staircase construction
    VerifyHom {
        #[arg(long)]
        k: usize,
        #[arg(long, value_parser = parse_prime)]
        p: u32,
        /// Print gamma, epsilon and mu(i) in full
        #[arg(long)]
        expand: bool,
    },
}

/// Semicolon-separated partitions, e.g. `[1];[2,1];[]`.
#[derive(Clone, Debug)]
struct Quotient(Vec<Partition>);

impl FromStr for Quotient {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        s.split(';')
            .map(Partition::from_str)
            .collect::<Result<Vec<_>, _>>()
            .map(Quotient)
    }
}

fn parse_prime(s: &str) -> Result<u32, String> {
    let p: u32 = s.parse().map_err(|_| format!("{s:?} is not an integer"))?;
    if is_prime(p) {
        Ok(p)
    } else {
        Err(format!("{p} is not a prime"))
    }
}

struct Report {
    text: String,
    json: Value,
    ok: bool,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Report {
            text,
            json,
            ok: true,
        }
    }
}

fn block(p: u32, w: usize) -> Result<BlockLabel, Error> {
    if w == 0 {
        let rho = rouquier_core(p, 1)?.rho().clone();
        BlockLabel::new(p, rho, 0)
    } else {
        rouquier_core(p, w)
    }
}

fn run(command: Command) -> Result<Report, Error> {
    match command {
        Command::CoreQuotient { p, partition } => {
            let cq = core_and_quotient(&partition, p);
            let text = format!(
                "core: {}\nquotient: {}\nweight: {}\n",
                cq.core,
                quotient_label(&cq.quotient),
                cq.weight
            );
            Ok(Report::ok(
                text,
                serde_json::to_value(&cq).expect("serializable"),
            ))
        }
        Command::Abacus { p, partition } => {
            let a = to_abacus(&partition, p);
            let text = format!("beads: {}\n{}", a.bead_count(), a.render());
            let json = json!({ "p": p, "partition": partition, "beads": a.beads() });
            Ok(Report::ok(text, json))
        }
        Command::Lr {
            outer,
            inner,
            content,
        } => {
            let c = lr_coefficient(&outer, &inner, &content);
            Ok(Report::ok(format!("{c}\n"), json!(c)))
        }
        Command::Build { p, w, quotient } => {
            let b = block(p, w)?;
            let lambda = from_core_and_quotient(&b, &quotient.0)?;
            let text = format!("{lambda}\n");
            let json = json!({ "p": p, "w": w, "n": lambda.size(), "partition": lambda });
            Ok(Report::ok(text, json))
        }
        Command::Radpoly {
            p,
            w,
            lambda_quotient,
            sigma_quotient,
            expand,
        } => {
            let b = block(p, w)?;
            let poly = rad_polynomial_quotients(&b, &lambda_quotient.0, &sigma_quotient.0)?;
            let mut text = format!("{poly}\n");
            let mut json = json!({ "p": p, "w": w, "polynomial": poly.to_string() });
            if expand {
                let lambda = from_core_and_quotient(&b, &lambda_quotient.0)?;
                let sigma = from_core_and_quotient(&b, &sigma_quotient.0)?;
                text = format!("lambda: {lambda}\nsigma: {sigma}\n{text}");
                json["lambda"] = json!(lambda);
                json["sigma"] = json!(sigma);
            }
            Ok(Report::ok(text, json))
        }
        Command::Radseries {
            p,
            w,
            lambda_quotient,
            expand,
        } => {
            let b = block(p, w)?;
            let series = radical_series_quotients(&b, &lambda_quotient.0)?;
            let text = format!(
                "radical series of S<{}> (Loewy length {})\n{}",
                quotient_label(&lambda_quotient.0),
                series.loewy_length(),
                series.render(expand)
            );
            Ok(Report::ok(
                text,
                serde_json::to_value(&series).expect("serializable"),
            ))
        }
        Command::VerifyHom { k, p, expand } => {
            let cert = verify_hom_dimension(k, p)?;
            let mut text = format!(
                "k = {}, p = {}, w = {}, n = {}\n",
                cert.k, cert.p, cert.w, cert.n
            );
            if expand {
                text += &format!("gamma = {}\nepsilon = {}\n", cert.gamma, cert.epsilon);
                for (i, m) in cert.mus.iter().enumerate() {
                    text += &format!("mu({}) = {m}\n", i + 1);
                }
            }
            text += "checks:\n";
            for c in &cert.checks {
                let tag = match c.status {
                    rouquier::homspace::CheckStatus::Pass => "pass",
                    rouquier::homspace::CheckStatus::Fail => "FAIL",
                };
                text += &format!(
                    "  [{tag}] {}\n         expected: {}\n         computed: {}\n",
                    c.name, c.expected, c.computed
                );
            }
            text += "assumed:\n";
            for a in &cert.assumed {
                text += &format!("  {}: {}\n", a.name, a.citation);
            }
            match cert.concluded_dimension {
                Some(d) => {
                    text += &format!("dim Hom(S^gamma, S^epsilon) = {d}\n");
                    text += &format!(
                        "corollary (Weyl modules, p odd): dim Hom(Delta(gamma), Delta(epsilon)) = {d}\n"
                    );
                }
                None => text += "certificate incomplete: a check failed\n",
            }
            let ok = cert.all_pass();
            Ok(Report {
                text,
                json: serde_json::to_value(&cert).expect("serializable"),
                ok,
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.threads > 0 {
        // only fails if a global pool already exists
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global();
    }
    let report = match run(cli.command) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return match e {
                Error::Invariant(_) => ExitCode::from(1),
                _ => ExitCode::from(2),
            };
        }
    };
    let json_text = serde_json::to_string_pretty(&report.json).expect("serializable") + "\n";
    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, &json_text) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    if cli.json {
        print!("{json_text}");
    } else {
        print!("{}", report.text);
    }
    if report.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
