use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use orbit_model::corpus::random_gset_seeded;
use orbit_model::diagram::theta_shriek;
use orbit_model::group::{FiniteGroup, OrbitCategory, Subgroup};
use orbit_model::gsset::{fixed_points, orbit_space, GSimplicialSet};
use orbit_model::homology::homology;
use orbit_model::homotopy::{fixed_weq_report, orbit_weq_report, WeqReport};
use orbit_model::io::{self, DiagramDoc, GSetDoc, GroupDoc, MapDoc, SsetDoc};
use orbit_model::scenarios::{ScenarioReport, ScenarioSpec};
use orbit_model::sset::SimplicialSet;
use orbit_model::Error;

#[derive(Parser)]
#[command(name = "orbit-model", version, about = "Orbit spaces, fixed points and equivalence checks for finite simplicial G-sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Dimension bound; spaces given as complexes are built at this bound,
    /// explicit spaces are truncated to it.
    #[arg(long, global = true)]
    dim: Option<usize>,
    /// Highest homology degree compared (default: dimension bound − 1).
    #[arg(long = "up-to", global = true)]
    up_to: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Orbit space A/H.
    Orbits {
        #[arg(long)]
        space: PathBuf,
        /// Subgroup as generator indices (e.g. "1,2"), "e" or "G".
        #[arg(long, default_value = "G")]
        subgroup: String,
    },
    /// Fixed points A^H.
    Fixed {
        #[arg(long)]
        space: PathBuf,
        #[arg(long, default_value = "G")]
        subgroup: String,
    },
    /// Integral homology; all degrees through --up-to unless --degree is given.
    Homology {
        #[arg(long)]
        space: PathBuf,
        #[arg(long)]
        degree: Option<usize>,
    },
    /// The diagram G/H ↦ A/H over the orbit category of a family.
    OrbitDiagram {
        #[arg(long)]
        space: PathBuf,
        /// "all", "trivial" or a JSON list of generator lists.
        #[arg(long, default_value = "all")]
        family: String,
    },
    /// Orbit and fixed-point equivalence reports for a G-map.
    Check {
        #[arg(long)]
        map: PathBuf,
        #[arg(long, default_value = "all")]
        family: String,
    },
    /// Validates an orbit diagram file and echoes it.
    Diagram {
        #[arg(long)]
        diagram: PathBuf,
    },
    /// Scenario reports: goodwillie, quillen-noneq, gen-cofib, cylinder.
    Scenario {
        name: String,
        /// Group for gen-cofib and random cylinder inputs.
        #[arg(long, default_value = "Z/2")]
        group: String,
        #[arg(long, default_value = "all")]
        family: String,
        /// G-simplicial set for the cylinder scenario (random if omitted).
        #[arg(long)]
        space: Option<PathBuf>,
        /// Seed for random cylinder inputs.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Include wall-clock runtime in the report.
        #[arg(long)]
        timing: bool,
    },
}

const DEFAULT_DIM: usize = 4;

enum Failure {
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn with_path<T>(path: &Path, r: orbit_model::Result<T>) -> Result<T, Failure> {
    r.map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn bounded_space(doc: &SsetDoc, dim: Option<usize>) -> orbit_model::Result<SimplicialSet> {
    match (doc, dim) {
        (SsetDoc::Complex { vertices, simplices, .. }, Some(d)) => {
            SsetDoc::Complex { dim: d, vertices: *vertices, simplices: simplices.clone() }.build()
        }
        (_, Some(d)) => {
            let set = doc.build()?;
            if d > set.dim() {
                return Err(Error::ShapeMismatch(format!(
                    "--dim {d} exceeds the dimension {} of an explicit simplicial set",
                    set.dim()
                )));
            }
            Ok(set.truncate(d))
        }
        (_, None) => doc.build(),
    }
}

fn load_gset(path: &Path, dim: Option<usize>) -> Result<GSimplicialSet, Failure> {
    let doc: GSetDoc = with_path(path, io::parse(&read(path)?, "space"))?;
    let space = with_path(path, bounded_space(&doc.space, dim))?;
    let reduced = GSetDoc { space: SsetDoc::from_set(&space), ..doc };
    with_path(path, reduced.build())
}

fn subgroup(spec: &str, group: &FiniteGroup) -> Result<Subgroup, Failure> {
    match spec.trim() {
        "G" => Ok(Subgroup::whole(group)),
        "e" | "" => Ok(Subgroup::trivial()),
        list => {
            let gens = list
                .split(',')
                .map(|s| s.trim().parse::<usize>().map_err(|_| Failure::Usage(format!("bad subgroup generator '{s}'"))))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Subgroup::generated(group, &gens)?)
        }
    }
}

fn up_to(cli: &Cli, dim: usize) -> Result<usize, Failure> {
    let u = cli.up_to.unwrap_or(dim.saturating_sub(1));
    if u + 1 > dim {
        return Err(Failure::Usage(format!("--up-to {u} needs a dimension bound of at least {}", u + 1)));
    }
    Ok(u)
}

fn set_text(set: &SimplicialSet) -> String {
    let nondeg: Vec<usize> = (0..=set.dim()).map(|k| set.nondegenerate(k).len()).collect();
    format!("dimension bound: {}\nsimplices per level: {:?}\nnondegenerate per level: {:?}\n", set.dim(), set.counts(), nondeg)
}

fn weq_text(report: &WeqReport) -> String {
    let mut out = format!("{} report (homology through degree {})\n", report.kind, report.up_to);
    let width = report.entries.iter().map(|e| e.subgroup.chars().count()).max().unwrap_or(0);
    for e in &report.entries {
        let evidence = serde_json::to_string(&e.verdict.evidence).unwrap_or_default();
        out.push_str(&format!(
            "  {}{}  {:?}  {}\n",
            e.subgroup,
            " ".repeat(width - e.subgroup.chars().count()),
            e.verdict.status,
            evidence
        ));
    }
    out
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut s = io::to_json(value);
    s.push('\n');
    s
}

fn run(cli: &Cli) -> Result<(String, bool), Failure> {
    let text = cli.format == Format::Text;
    if cli.dim == Some(0) {
        return Err(Failure::Usage("--dim must be at least 1".into()));
    }
    match &cli.command {
        Command::Orbits { space, subgroup: spec } | Command::Fixed { space, subgroup: spec } => {
            let a = load_gset(space, cli.dim)?;
            let h = subgroup(spec, a.group())?;
            let set = if matches!(cli.command, Command::Orbits { .. }) { orbit_space(&a, &h).0 } else { fixed_points(&a, &h).0 };
            Ok((if text { set_text(&set) } else { json(&SsetDoc::from_set(&set)) }, true))
        }
        Command::Homology { space, degree } => {
            let doc: GSetDoc = match with_path(space, io::parse::<GSetDoc>(&read(space)?, "space")) {
                Ok(doc) => doc,
                Err(_) => GSetDoc {
                    group: GroupDoc::Named { name: "trivial".into() },
                    space: with_path(space, io::parse(&read(space)?, "space"))?,
                    action: Default::default(),
                },
            };
            let set = with_path(space, bounded_space(&doc.space, cli.dim))?;
            let degrees: Vec<usize> = match degree {
                Some(k) => vec![*k],
                None => (0..=up_to(cli, set.dim())?).collect(),
            };
            let groups = degrees.iter().map(|&k| Ok((k, homology(&set, k)?))).collect::<Result<Vec<_>, Error>>()?;
            if text {
                Ok((groups.iter().map(|(k, h)| format!("H{k} = {h}\n")).collect(), true))
            } else {
                let map: std::collections::BTreeMap<String, _> = groups.into_iter().map(|(k, h)| (k.to_string(), h)).collect();
                Ok((json(&map), true))
            }
        }
        Command::OrbitDiagram { space, family } => {
            let a = load_gset(space, cli.dim)?;
            let fam = io::parse_family(family, a.group())?;
            let category = Arc::new(OrbitCategory::new(a.group().clone(), fam)?);
            let d = theta_shriek(&a, &category)?;
            if text {
                let mut out = String::new();
                for (i, h) in category.objects().iter().enumerate() {
                    out.push_str(&format!("G/{}: {:?}\n", h.label(category.group()), d.at(i).counts()));
                }
                out.push_str(&format!("morphisms: {}\n", category.morphisms().len()));
                Ok((out, true))
            } else {
                Ok((json(&DiagramDoc::from_diagram(&d)), true))
            }
        }
        Command::Diagram { diagram } => {
            let doc: DiagramDoc = with_path(diagram, io::parse(&read(diagram)?, "diagram"))?;
            let d = with_path(diagram, doc.build())?;
            if text {
                Ok((format!("valid diagram with {} objects and {} morphisms\n", d.objects().len(), d.maps().len()), true))
            } else {
                Ok((json(&DiagramDoc::from_diagram(&d)), true))
            }
        }
        Command::Check { map, family } => {
            let doc: MapDoc = with_path(map, io::parse(&read(map)?, "map"))?;
            let f = with_path(map, doc.build())?;
            let f = match cli.dim {
                Some(d) if d < f.source().dim() => {
                    let truncate = |a: &GSimplicialSet| {
                        let reduced = GSetDoc { space: SsetDoc::from_set(&a.underlying().truncate(d)), ..GSetDoc::from_gset(a) };
                        reduced.build()
                    };
                    let levels = f.underlying().levels()[..=d].to_vec();
                    orbit_model::gsset::GMap::from_levels(truncate(f.source())?, truncate(f.target())?, levels)?
                }
                Some(d) if d > f.source().dim() => {
                    return Err(Failure::Usage(format!("--dim {d} exceeds the dimension of the map")));
                }
                _ => f,
            };
            let fam = io::parse_family(family, f.source().group())?;
            let u = up_to(cli, f.source().dim())?;
            let orbit = orbit_weq_report(&f, &fam, u)?;
            let fixed = fixed_weq_report(&f, &fam, u)?;
            if text {
                Ok((format!("{}{}", weq_text(&orbit), weq_text(&fixed)), true))
            } else {
                Ok((json(&serde_json::json!({ "orbit": orbit, "fixed": fixed })), true))
            }
        }
        Command::Scenario { name, group, family, space, seed, timing } => {
            let dim = cli.dim.unwrap_or(DEFAULT_DIM);
            let spec = match name.as_str() {
                "goodwillie" => ScenarioSpec::Goodwillie { dim, controls: true },
                "quillen-noneq" => ScenarioSpec::QuillenNoneq,
                "gen-cofib" => {
                    let g = io::load_group(group)?;
                    let fam = io::parse_family(family, &g)?;
                    ScenarioSpec::GenCofib {
                        group: GroupDoc::from_group(&g),
                        family: io::FamilyDoc::from_family(&g, &fam),
                        n_max: dim - 1,
                    }
                }
                "cylinder" => {
                    let a = match space {
                        Some(path) => load_gset(path, cli.dim)?,
                        None => random_gset_seeded(*seed, &Arc::new(io::load_group(group)?), dim),
                    };
                    let fam = io::parse_family(family, a.group())?;
                    ScenarioSpec::Cylinder { space: GSetDoc::from_gset(&a), family: io::FamilyDoc::from_family(a.group(), &fam) }
                }
                other => {
                    return Err(Failure::Usage(format!(
                        "unknown scenario '{other}' (expected goodwillie, quillen-noneq, gen-cofib or cylinder)"
                    )))
                }
            };
            let report: ScenarioReport = if *timing { spec.run_timed()? } else { spec.run()? };
            let body = if text { report.to_text() } else { json(&report) };
            Ok((body, report.passed()))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (body, ok) = match run(&cli) {
        Ok(result) => result,
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            return ExitCode::from(2);
        }
    };
    if let Some(path) = &cli.out {
        if let Err(e) = fs::write(path, &body) {
            eprintln!("error: {}: {e}", path.display());
            return ExitCode::from(2);
        }
    } else {
        print!("{body}");
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        eprintln!("one or more claims failed");
        ExitCode::from(1)
    }
}
