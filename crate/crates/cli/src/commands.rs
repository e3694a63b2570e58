use std::fs::{self, OpenOptions};
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use berge_core::constructions::{
    construct_prop4, construct_prop5_lower, construct_prop7_lower, construct_s5_cyclic,
    construct_theorem2_lower, construct_theorem3i_lower, goodness, prop4_properties,
    prop5_properties, prop7_properties, s5_cyclic_properties, theorem2_properties,
    theorem3i_properties, Goodness, PropertyCheck,
};
use berge_core::hrg::{parse_coloring, serialize_with_comments};
use berge_core::search::{
    ramsey_value_with, search_with, verify_coloring, SearchCertificate, SearchConfig, TargetSpec,
    Verdict, WitnessRecord,
};
use berge_core::{Coloring, Error, Graph};

use crate::{CheckArgs, Construction, ConstructArgs, GoodArgs, SearchArgs, Switch};

pub enum Status {
    Pass,
    Witness,
}

impl Status {
    pub fn code(&self) -> u8 {
        match self {
            Status::Pass => 0,
            Status::Witness => 1,
        }
    }
}

pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    fn io(path: &Path, e: std::io::Error) -> Self {
        Failure::input(format!("{}: {e}", path.display()))
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Unsupported(_) | Error::AttemptsExhausted { .. } => 3,
            Error::Internal(_) => 4,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type Outcome = Result<Status, Failure>;

fn need<T: Copy>(value: Option<T>, flag: &str, name: &str) -> Result<T, Failure> {
    value.ok_or_else(|| Failure::input(format!("{name} needs --{flag}")))
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::io(path, e))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::io(path, e))
}

fn create_dir(path: &Path) -> Result<(), Failure> {
    fs::create_dir_all(path).map_err(|e| Failure::io(path, e))
}

pub fn construct(a: &ConstructArgs) -> Outcome {
    let (name, params, col, props, extra) = match a.name {
        Construction::Thm2 => {
            let (n, c) = (need(a.n, "n", "thm2")?, need(a.c, "c", "thm2")?);
            let col = construct_theorem2_lower(n, c)?;
            let props = theorem2_properties(&col);
            ("thm2", format!("n={n} c={c}"), col, props, vec![])
        }
        Construction::Thm3i => {
            let (n, c, r) = (need(a.n, "n", "thm3i")?, need(a.c, "c", "thm3i")?, need(a.r, "r", "thm3i")?);
            let col = construct_theorem3i_lower(n, c, r)?;
            let props = theorem3i_properties(&col, n);
            ("thm3i", format!("n={n} c={c} r={r}"), col, props, vec![])
        }
        Construction::Prop4 => {
            let (n, c) = (need(a.n, "n", "prop4")?, need(a.c, "c", "prop4")?);
            let p4 = construct_prop4(n, c, a.seed)?;
            let props = prop4_properties(&p4);
            let mut extra = vec![format!("parts {:?}", p4.parts)];
            extra.extend(p4.pair_colors.iter().map(|(u, v, k)| format!("pair {u} {v} {k}")));
            ("prop4", format!("n={n} c={c}"), p4.coloring, props, extra)
        }
        Construction::Prop5 => {
            let (n, m) = (need(a.n, "n", "prop5")?, need(a.m, "m", "prop5")?);
            let col = construct_prop5_lower(n, m)?;
            let props = prop5_properties(&col, m);
            ("prop5", format!("n={n} m={m}"), col, props, vec![])
        }
        Construction::Prop7 => {
            let k = need(a.k, "k", "prop7")?;
            let col = construct_prop7_lower(k)?;
            let props = prop7_properties(&col, k);
            ("prop7", format!("k={k}"), col, props, vec![])
        }
        Construction::S5cyclic => {
            let col = construct_s5_cyclic();
            let props = s5_cyclic_properties(&col);
            ("s5cyclic", String::new(), col, props, vec![])
        }
    };
    create_dir(&a.out)?;
    let mut comments = vec![format!("construction {name} {params}").trim_end().to_string(), format!("seed {}", a.seed)];
    comments.extend(extra);
    let hrg = a.out.join(format!("{name}.hrg"));
    write(&hrg, &serialize_with_comments(&col, &comments))?;
    let report = props_text(&props);
    write(&a.out.join(format!("{name}.props")), &report)?;
    let failed = props.iter().filter(|p| !p.passed).count();
    println!(
        "{}: {} vertices, {} hyperedges, {} colors",
        hrg.display(),
        col.base().n_vertices(),
        col.base().n_edges(),
        col.n_colors()
    );
    print!("{report}");
    Ok(if failed == 0 { Status::Pass } else { Status::Witness })
}

fn props_text(props: &[PropertyCheck]) -> String {
    props
        .iter()
        .map(|p| format!("{} {}\n", p.name, if p.passed { "PASS" } else { "FAIL" }))
        .collect()
}

pub fn check(a: &CheckArgs) -> Outcome {
    let col = parse_coloring(&read(&a.file)?)?;
    let targets = TargetSpec::parse(&a.targets)?;
    let report = verify_coloring(&col, &targets)?;
    let mut found = false;
    for r in &report {
        match &r.witness {
            None => println!("color {}: no Berge copy of {}", r.color, targets.targets[r.color as usize - 1]),
            Some((g, emb)) => {
                found = true;
                let w = WitnessRecord::from_embedding(r.color, g, emb);
                println!("color {}: Berge copy of {}", r.color, graph_label(g));
                println!("{}", w.to_line());
            }
        }
    }
    Ok(if found { Status::Witness } else { Status::Pass })
}

fn graph_label(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
    format!("G[{}]/{}", edges.join(" "), g.n_vertices())
}

fn parse_range(s: &str) -> Result<(usize, usize), Failure> {
    let bad = || Failure::input(format!("range must be a..b, got {s:?}"));
    let (lo, hi) = s.split_once("..").ok_or_else(bad)?;
    let hi = hi.strip_prefix('=').unwrap_or(hi);
    Ok((lo.trim().parse().map_err(|_| bad())?, hi.trim().parse().map_err(|_| bad())?))
}

fn stem(r: usize, c: u8, targets: &str) -> String {
    let t: String = targets
        .chars()
        .map(|ch| if ch.is_ascii_alphanumeric() { ch } else { '-' })
        .collect();
    format!("r{r}_c{c}_{t}")
}

struct SearchOutput {
    r: usize,
    c: u8,
    dir: PathBuf,
    stem: String,
    header: String,
}

impl SearchOutput {
    fn record(&self, n: usize, cert: &SearchCertificate, elapsed: Duration, targets: &str) -> Result<(), Failure> {
        let path = self.dir.join(format!("{}_N{n}.cert", self.stem));
        let mut text = cert.to_text();
        text.push_str(&format!("# {} N={n}\n", self.header));
        write(&path, &text)?;
        let tsv = self.dir.join("results.tsv");
        let fresh = !tsv.exists();
        let mut f = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&tsv)
            .map_err(|e| Failure::io(&tsv, e))?;
        let (r, c) = (self.r, self.c);
        if fresh {
            writeln!(f, "r\tc\ttargets\tN\tverdict\ttime_s").map_err(|e| Failure::io(&tsv, e))?;
        }
        let verdict = if cert.verdict.is_all_contain() { "ALL_CONTAIN" } else { "COUNTEREXAMPLE" };
        writeln!(f, "{r}\t{c}\t{targets}\t{n}\t{verdict}\t{:.3}", elapsed.as_secs_f64())
            .map_err(|e| Failure::io(&tsv, e))?;
        println!(
            "N={n} {verdict} enumerated {} classes {}",
            cert.colorings_enumerated,
            cert.canonical_classes.map_or_else(|| "na".to_string(), |c| c.to_string())
        );
        Ok(())
    }
}

pub fn search(a: &SearchArgs) -> Outcome {
    let targets = TargetSpec::parse(&a.targets)?;
    let threads = a
        .threads
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    if threads == 0 {
        return Err(Failure::input("--threads must be positive"));
    }
    let cfg = SearchConfig {
        threads,
        ..SearchConfig::new(a.symmetry == Switch::On)
    };
    create_dir(&a.out)?;
    let out = SearchOutput {
        r: a.r,
        c: a.c,
        dir: a.out.clone(),
        stem: stem(a.r, a.c, &a.targets),
        header: format!(
            "r={} c={} targets={} symmetry={} seed={}",
            a.r,
            a.c,
            targets,
            if cfg.use_symmetry { "on" } else { "off" },
            a.seed
        ),
    };
    if let Some(n) = a.n {
        let start = std::time::Instant::now();
        let cert = search_with(a.r, a.c, &targets, n, &cfg)?;
        out.record(n, &cert, start.elapsed(), &a.targets)?;
        return Ok(match cert.verdict {
            Verdict::AllContain => Status::Pass,
            Verdict::Counterexample(_) => Status::Witness,
        });
    }
    let (lo, hi) = parse_range(a.range.as_deref().unwrap_or_default())?;
    let mut failure = None;
    let value = ramsey_value_with(a.r, a.c, &targets, lo, hi, &cfg, &mut |n, cert, elapsed| {
        if failure.is_none() {
            failure = out.record(n, cert, elapsed, &a.targets).err();
        }
    })?;
    if let Some(f) = failure {
        return Err(f);
    }
    let lower: &Coloring = &value.lower;
    println!("value {}", value.value);
    println!(
        "lower witness on {} vertices in {}",
        lower.base().n_vertices(),
        out.dir.join(format!("{}_N{}.cert", out.stem, value.value - 1)).display()
    );
    Ok(Status::Pass)
}

pub fn good(a: &GoodArgs) -> Outcome {
    let g = Graph::parse_edge_list(&read(&a.file)?)?;
    match goodness(&g, a.n, a.r, a.goodness_offset)? {
        Goodness::Good(w) => {
            println!("good");
            println!("V1 {}", join(&w.v1));
            println!("V2 {}", join(&w.v2));
            println!("margins {}", join(&w.margins));
            Ok(Status::Pass)
        }
        Goodness::NotGood { obstruction_size } => {
            println!("not good");
            println!("obstruction size {obstruction_size}");
            Ok(Status::Witness)
        }
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}
