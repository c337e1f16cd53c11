mod report;
mod svg;
mod table;

use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use chebknot::chebyshev_knot::{search_many, CertificationPolicy};
use chebknot::harmonic::enumerate_family;
use chebknot::invariants::identify_pd;
use chebknot::plane_curve::{billiard_map, plane_braid_word};
use chebknot::{CurveSpec, HarmonicKnotSpec, PdCode, Phase, SearchConfig, SignAssignment};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use report::{build, identify_diagram, DiagramReport, IdentificationReport, KnotSpec};

#[derive(Parser)]
#[command(name = "chebknot", version, about = "Chebyshev and harmonic knots")]
struct Cli {
    /// On failure, print `{"error": {"code", "message"}}` to stderr.
    #[arg(long, global = true)]
    error_json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Gauss,
    Pd,
    Svg,
}

#[derive(Args)]
struct KnotArgs {
    a: u32,
    b: u32,
    c: u64,
    /// Phase as a decimal string; omitted or zero means a harmonic knot.
    #[arg(long, allow_hyphen_values = true)]
    phi: Option<Phase>,
    /// Relative margin a numeric sign must exceed.
    #[arg(long)]
    margin: Option<f64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    /// Conway signs for a = 3, z-difference signs otherwise.
    Auto,
    /// sign(z(t) − z(s)) per crossing in enumeration order.
    Zdiff,
    /// Twist signs D per crossing in enumeration order.
    Twist,
    /// Conway entries by increasing x (a = 3 only).
    Conway,
}

#[derive(Subcommand)]
enum Command {
    /// Crossing data, codes, and identification of one knot.
    Diagram {
        #[command(flatten)]
        knot: KnotArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Also write an SVG drawing to this path.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Identify a knot given by (a, b, c) or by a PD code.
    Identify {
        a: Option<u32>,
        b: Option<u32>,
        c: Option<u64>,
        #[arg(long, allow_hyphen_values = true)]
        phi: Option<Phase>,
        #[arg(long)]
        margin: Option<f64>,
        /// PD code such as `[[1,5,2,4],[3,1,4,6],[5,3,6,2]]`.
        #[arg(long, conflicts_with_all = ["a", "b", "c", "phi"])]
        pd: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Mirror classes of the harmonic knots H(a, b, c).
    Classes {
        a: u32,
        b: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Regenerate the concluding tables and diff them against the expected list.
    Table {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Find (c, phi) whose diagram has the given signs.
    Search {
        a: u32,
        b: u32,
        /// String of `+` and `-`.
        #[arg(long, allow_hyphen_values = true)]
        signs: String,
        #[arg(long, value_enum, default_value = "auto")]
        kind: Kind,
        #[arg(long, default_value_t = 1)]
        c_min: u32,
        #[arg(long, default_value_t = 2000)]
        c_max: u32,
        #[arg(long, default_value = "0.0001")]
        phi_step: Phase,
        #[arg(long, default_value = "0.05")]
        phi_max: Phase,
        #[arg(long)]
        margin: Option<f64>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Plane braid word of the (a, b) curve (a odd).
    Braid {
        a: u32,
        b: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Sample the curve and its billiard coordinates (X, Y).
    Billiard {
        a: u32,
        b: u32,
        #[arg(long, default_value_t = 16)]
        samples: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn policy(margin: Option<f64>) -> anyhow::Result<CertificationPolicy> {
    let mut p = CertificationPolicy::default();
    if let Some(m) = margin {
        if !(m.is_finite() && m >= 0.0) {
            bail!(chebknot::Error::InvalidInput(format!(
                "margin must be a nonnegative number, got {m}"
            )));
        }
        p.epsilon = m;
    }
    Ok(p)
}

fn only(format: Format, allowed: &[Format], command: &str) -> anyhow::Result<()> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        let name = format
            .to_possible_value()
            .map(|v| v.get_name().to_string())
            .unwrap_or_default();
        bail!(chebknot::Error::InvalidInput(format!(
            "{command} does not support --format {name}"
        )))
    }
}

fn json<T: Serialize>(value: &T) -> anyhow::Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn cmd_diagram(knot: KnotArgs, format: Format, svg_path: Option<PathBuf>) -> anyhow::Result<String> {
    let spec = KnotSpec {
        a: knot.a,
        b: knot.b,
        c: knot.c,
        phi: knot.phi,
    };
    let built = build(&spec, &policy(knot.margin)?)?;
    if let Some(path) = &svg_path {
        std::fs::write(path, svg::render(&built.diagram, &spec.label()))
            .with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(match format {
        Format::Svg => svg::render(&built.diagram, &spec.label()),
        Format::Gauss => report::gauss_text(&built.diagram.gauss_code()) + "\n",
        Format::Pd => report::pd_text(&built.diagram.pd_code().crossings) + "\n",
        Format::Json => json(&DiagramReport::new(spec, &built)?)?,
        Format::Text => DiagramReport::new(spec, &built)?.text(),
    })
}

#[derive(Serialize)]
struct IdentifyOutput {
    #[serde(skip_serializing_if = "Option::is_none")]
    spec: Option<KnotSpec>,
    identification: Option<IdentificationReport>,
}

fn cmd_identify(
    abc: (Option<u32>, Option<u32>, Option<u64>),
    phi: Option<Phase>,
    margin: Option<f64>,
    pd: Option<String>,
    format: Format,
) -> anyhow::Result<String> {
    only(format, &[Format::Text, Format::Json], "identify")?;
    let out = match (pd, abc) {
        (Some(code), _) => IdentifyOutput {
            spec: None,
            identification: Some(identify_pd(&PdCode::parse(&code)?)?.into()),
        },
        (None, (Some(a), Some(b), Some(c))) => {
            let spec = KnotSpec { a, b, c, phi };
            let built = build(&spec, &policy(margin)?)?;
            IdentifyOutput {
                spec: Some(spec),
                identification: identify_diagram(&built.diagram)?,
            }
        }
        _ => bail!(chebknot::Error::InvalidInput("give a b c or --pd".into())),
    };
    if format == Format::Json {
        return json(&out);
    }
    let mut s = out.spec.map(|k| k.label() + "\n").unwrap_or_default();
    match &out.identification {
        Some(id) => s.push_str(&id.text()),
        None => s.push_str("knot       not identified (too many crossings for the state sum)\n"),
    }
    Ok(s)
}

#[derive(Serialize)]
struct ClassRow {
    representative: u64,
    mirror: u64,
    self_paired: bool,
    knot: Option<String>,
}

#[derive(Serialize)]
struct ClassesOutput {
    a: u32,
    b: u32,
    heights: Vec<u64>,
    classes: Vec<ClassRow>,
}

fn cmd_classes(a: u32, b: u32, format: Format) -> anyhow::Result<String> {
    only(format, &[Format::Text, Format::Json], "classes")?;
    let family = enumerate_family(a, b)?;
    let mut classes = Vec::new();
    for class in &family.classes {
        let spec = HarmonicKnotSpec::new(a, b, class.representative)?;
        let d = chebknot::harmonic::build_diagram(&spec)?;
        classes.push(ClassRow {
            representative: class.representative,
            mirror: class.mirror,
            self_paired: class.self_paired,
            knot: identify_diagram(&d)?.map(|id| id.label),
        });
    }
    let out = ClassesOutput {
        a,
        b,
        heights: family.values,
        classes,
    };
    if format == Format::Json {
        return json(&out);
    }
    let mut s = format!(
        "H({a}, {b}, c): {} heights coprime to ab, {} mirror classes\n",
        out.heights.len(),
        out.classes.len()
    );
    for row in &out.classes {
        let pair = if row.self_paired {
            format!("c = {} (self-paired)", row.representative)
        } else {
            format!("c = {} / mirror c = {}", row.representative, row.mirror)
        };
        s.push_str(&format!("  {pair:<28} {}\n", row.knot.as_deref().unwrap_or("-")));
    }
    Ok(s)
}

fn target_for(a: u32, b: u32, signs: &str, kind: Kind) -> anyhow::Result<SignAssignment> {
    let parsed = SignAssignment::parse(signs)?;
    let curve = CurveSpec::new(a, b)?;
    let kind = match kind {
        Kind::Auto if a == 3 => Kind::Conway,
        Kind::Auto => Kind::Zdiff,
        k => k,
    };
    let n = curve.crossing_count();
    if parsed.len() != n {
        bail!(chebknot::Error::LengthMismatch {
            expected: n,
            got: parsed.len()
        });
    }
    Ok(match kind {
        Kind::Conway => SignAssignment::from_conway_a3(&curve, &parsed.signs)?,
        Kind::Twist => SignAssignment::from_twist(&curve, &parsed.signs)?,
        _ => parsed,
    })
}

#[derive(Serialize)]
struct SearchOutput {
    a: u32,
    b: u32,
    c: u32,
    phi: Phase,
    min_margin: f64,
    zdiff_signs: String,
    knot: Option<String>,
}

fn cmd_search(a: u32, b: u32, signs: &str, kind: Kind, config: SearchConfig, format: Format) -> anyhow::Result<String> {
    only(format, &[Format::Text, Format::Json], "search")?;
    let target = target_for(a, b, signs, kind)?;
    let hit = search_many(a, b, std::slice::from_ref(&target), &config)?
        .pop()
        .expect("one result per target")?;
    let spec = KnotSpec {
        a,
        b,
        c: hit.c as u64,
        phi: Some(hit.phi),
    };
    let built = build(&spec, &config.policy)?;
    let out = SearchOutput {
        a,
        b,
        c: hit.c,
        phi: hit.phi,
        min_margin: hit.margin,
        zdiff_signs: hit.signs.clone(),
        knot: identify_diagram(&built.diagram)?.map(|id| id.label),
    };
    if format == Format::Json {
        return json(&out);
    }
    Ok(format!(
        "c = {}, phi = {}\nmin margin {:.3e}\nz diff     {}\nknot       {}\nreproduce: chebknot diagram {a} {b} {} --phi {}\n",
        out.c,
        out.phi,
        out.min_margin,
        out.zdiff_signs,
        out.knot.as_deref().unwrap_or("not identified"),
        out.c,
        out.phi
    ))
}

fn cmd_braid(a: u32, b: u32, format: Format) -> anyhow::Result<String> {
    only(format, &[Format::Text, Format::Json], "braid")?;
    let braid = plane_braid_word(&CurveSpec::new(a, b)?)?;
    if format == Format::Json {
        return json(&braid);
    }
    let gens: Vec<String> = braid.expanded().iter().map(|g| format!("s{g}")).collect();
    let mut s = format!(
        "word       {braid}\nstrings    {}\nexpanded   {}\n",
        braid.strings,
        gens.join(" ")
    );
    if let Some(plat) = &braid.plat {
        let pairs = |v: &[(u32, u32)]| {
            v.iter()
                .map(|(i, j)| format!("({i},{j})"))
                .collect::<Vec<_>>()
                .join(" ")
        };
        s.push_str(&format!(
            "plat       {} strings, caps {} / {}, free string {}\n",
            plat.strings,
            pairs(&plat.left),
            pairs(&plat.right),
            plat.free_string
        ));
    }
    Ok(s)
}

#[derive(Serialize)]
struct BilliardSample {
    t: f64,
    x: f64,
    y: f64,
    #[serde(rename = "X")]
    big_x: f64,
    #[serde(rename = "Y")]
    big_y: f64,
}

fn cmd_billiard(a: u32, b: u32, samples: u32, format: Format) -> anyhow::Result<String> {
    only(format, &[Format::Text, Format::Json], "billiard")?;
    let curve = CurveSpec::new(a, b)?;
    if samples == 0 {
        bail!(chebknot::Error::InvalidInput("samples must be positive".into()));
    }
    let mut rows = Vec::new();
    for i in 0..=samples {
        let t = -1.0 + 2.0 * i as f64 / samples as f64;
        let (x, y) = (chebknot::chebyshev::eval(a, t), chebknot::chebyshev::eval(b, t));
        let (big_x, big_y) = billiard_map(&curve, x.clamp(-1.0, 1.0), y.clamp(-1.0, 1.0))?;
        rows.push(BilliardSample { t, x, y, big_x, big_y });
    }
    if format == Format::Json {
        return json(&rows);
    }
    let mut s = format!("{:>9} {:>9} {:>9} {:>9} {:>9}\n", "t", "x", "y", "X", "Y");
    for r in &rows {
        s.push_str(&format!(
            "{:>9.5} {:>9.5} {:>9.5} {:>9.5} {:>9.5}\n",
            r.t, r.x, r.y, r.big_x, r.big_y
        ));
    }
    Ok(s)
}

fn run(cli: Cli) -> anyhow::Result<String> {
    match cli.command {
        Command::Diagram { knot, format, svg } => cmd_diagram(knot, format, svg),
        Command::Identify {
            a,
            b,
            c,
            phi,
            margin,
            pd,
            format,
        } => cmd_identify((a, b, c), phi, margin, pd, format),
        Command::Classes { a, b, format } => cmd_classes(a, b, format),
        Command::Table { format } => table::run(format),
        Command::Search {
            a,
            b,
            signs,
            kind,
            c_min,
            c_max,
            phi_step,
            phi_max,
            margin,
            format,
        } => {
            let config = SearchConfig {
                c_min,
                c_max,
                phi_step,
                phi_max,
                policy: policy(margin)?,
                ..SearchConfig::default()
            };
            cmd_search(a, b, &signs, kind, config, format)
        }
        Command::Braid { a, b, format } => cmd_braid(a, b, format),
        Command::Billiard { a, b, samples, format } => cmd_billiard(a, b, samples, format),
    }
}

#[derive(Serialize)]
struct ErrorBody<'a> {
    code: &'a str,
    message: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let error_json = cli.error_json;
    match run(cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            // a closed pipe is not an error worth reporting
            let _ = stdout.write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(err) => {
            let code = err
                .downcast_ref::<chebknot::Error>()
                .map_or("io", chebknot::Error::code);
            if error_json {
                let body = serde_json::json!({ "error": ErrorBody { code, message: format!("{err:#}") } });
                eprintln!("{body}");
            } else {
                eprintln!("error: {err:#}");
            }
            ExitCode::FAILURE
        }
    }
}
