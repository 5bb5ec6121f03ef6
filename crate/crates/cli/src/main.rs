mod args;
mod files;
mod report;

use std::io::{Read, Write};
use std::path::Path;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use hha_core::equivfun::{coinvariants, induce_four_angle, roundtrip_check};
use hha_core::exactlin::Field;
use hha_core::fourangle::{
    braiding_cotensor, braiding_tensor, hom_cotensor, hom_tensor, xi_comparison, BraidingCheck,
    FourAngleModule,
};
use hha_core::heisenberg::{build_smash, check_double_equivalence, SmashVariant};
use hha_core::homcore::{build_cyclic, build_dual, check_hom_hopf, HomHopfAlgebra};
use hha_core::repcat::{regular, ModuleBundle};
use hha_core::ydmod::{
    braiding, canonical_yd, check_braiding, check_hexagons, check_yd, symmetry_probe, trivial_yd,
    YDModule,
};
use hha_core::{Error, Result};

use args::{Check, Cli, Command, Equiv, Fa, Format, Gen, Hd, Pair, Product, Yd};
use files::{columns, AlgebraFile, ModuleFile};
use report::{sha256_hex, InputHash, ReportFile};

/// Reads inputs, hashing each into the report.
struct Ctx {
    report: ReportFile,
    stdin_used: bool,
}

impl Ctx {
    fn read(&mut self, name: &str, path: &str) -> Result<Vec<u8>> {
        let mut bytes = Vec::new();
        if path == "-" {
            if self.stdin_used {
                return Err(Error::InvalidArgument("stdin can be read only once".into()));
            }
            self.stdin_used = true;
            std::io::stdin()
                .read_to_end(&mut bytes)
                .map_err(|e| Error::InvalidArgument(format!("cannot read stdin: {e}")))?;
        } else {
            bytes = std::fs::read(path)
                .map_err(|e| Error::InvalidArgument(format!("cannot read {path}: {e}")))?;
        }
        self.report.inputs.push(InputHash {
            name: name.into(),
            sha256: sha256_hex(&bytes),
        });
        Ok(bytes)
    }

    fn algebra(&mut self, path: &str) -> Result<HomHopfAlgebra> {
        let bytes = self.read("alg", path)?;
        let file: AlgebraFile = serde_json::from_slice(&bytes)
            .map_err(|e| Error::Parse(format!("algebra file {path}: {e}")))?;
        let h = file.to_algebra()?;
        self.report.dim("alg", h.dim());
        Ok(h)
    }

    fn module(&mut self, name: &str, path: &str, h: &HomHopfAlgebra) -> Result<ModuleBundle> {
        let bytes = self.read(name, path)?;
        let file: ModuleFile = serde_json::from_slice(&bytes)
            .map_err(|e| Error::Parse(format!("module file {path}: {e}")))?;
        let m = file.to_bundle(h)?;
        self.report.dim(name, m.dim());
        Ok(m)
    }

    fn yd(&mut self, name: &str, path: &str, h: &HomHopfAlgebra) -> Result<YDModule> {
        YDModule::new(h, self.module(name, path, h)?)
    }

    fn four_angle(
        &mut self,
        name: &str,
        path: &str,
        h: &HomHopfAlgebra,
    ) -> Result<FourAngleModule> {
        FourAngleModule::new(h, self.module(name, path, h)?)
    }
}

/// A produced file, serialized.
type Artifact = Option<String>;

fn json(v: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(v).expect("files serialize") + "\n"
}

fn command_name(c: &Command) -> String {
    let s = match c {
        Command::Gen(Gen::Cyclic { .. }) => "gen cyclic",
        Command::Dual { .. } => "dual",
        Command::Check(Check::Hopf { .. }) => "check hopf",
        Command::Check(Check::Module { .. }) => "check module",
        Command::Yd(Yd::Canonical { .. }) => "yd canonical",
        Command::Yd(Yd::Check { .. }) => "yd check",
        Command::Yd(Yd::Braid { .. }) => "yd braid",
        Command::Symmetry { .. } => "symmetry",
        Command::Fa(Fa::Induce { .. }) => "fa induce",
        Command::Fa(Fa::Tensor(_)) => "fa tensor",
        Command::Fa(Fa::Cotensor(_)) => "fa cotensor",
        Command::Fa(Fa::Braid { .. }) => "fa braid",
        Command::Fa(Fa::Xi(_)) => "fa xi",
        Command::Equiv(Equiv::Roundtrip { .. }) => "equiv roundtrip",
        Command::Hd(Hd::Build { .. }) => "hd build",
        Command::Hd(Hd::Check { .. }) => "hd check",
    };
    s.into()
}

fn produces_file(c: &Command) -> bool {
    matches!(
        c,
        Command::Gen(_)
            | Command::Dual { .. }
            | Command::Yd(Yd::Canonical { .. })
            | Command::Fa(Fa::Induce { .. } | Fa::Tensor(_) | Fa::Cotensor(_))
    )
}

fn braiding_findings(ctx: &mut Ctx, b: BraidingCheck) {
    ctx.report.dim("source", b.source_dim);
    ctx.report.dim("target", b.target_dim);
    ctx.report
        .require("map lands in the target", b.map.is_some());
    if let Some(m) = &b.map {
        ctx.report.finding("map", columns(m));
    }
    ctx.report.absorb(b.report);
}

fn product(ctx: &mut Ctx, p: &Pair, cotensor: bool) -> Result<Artifact> {
    let h = ctx.algebra(&p.alg)?;
    let m = ctx.four_angle("M", &p.m, &h)?;
    let n = ctx.four_angle("N", &p.n, &h)?;
    let s = if cotensor {
        hom_cotensor(&h, &m, &n)?
    } else {
        hom_tensor(&h, &m, &n)?
    };
    ctx.report.dim("product", s.dim());
    ctx.report.require("closure certified", s.closure_certified);
    ctx.report.finding("basis", columns(s.basis()));
    ctx.report.absorb(s.report.clone());
    Ok(Some(json(&ModuleFile::from_bundle(&s.induced))))
}

fn run(ctx: &mut Ctx, cmd: &Command) -> Result<Artifact> {
    match cmd {
        Command::Gen(Gen::Cyclic { n, p, rational }) => {
            let f = if *rational {
                Field::Rationals
            } else {
                Field::prime(*p)?
            };
            let h = build_cyclic(*n, f)?;
            ctx.report.dim("alg", h.dim());
            Ok(Some(json(&AlgebraFile::from_algebra(&h))))
        }
        Command::Dual { alg } => {
            let h = ctx.algebra(alg)?;
            let d = build_dual(&h)?;
            ctx.report.dim("dual", d.dim());
            ctx.report.absorb(check_hom_hopf(&d)?);
            Ok(Some(json(&AlgebraFile::from_algebra(&d))))
        }
        Command::Check(Check::Hopf { alg }) => {
            let h = ctx.algebra(alg)?;
            ctx.report.absorb(check_hom_hopf(&h)?);
            Ok(None)
        }
        Command::Check(Check::Module { alg, module, role }) => {
            let h = ctx.algebra(alg)?;
            let mut m = ctx.module("M", module, &h)?;
            ctx.report.finding(
                "role",
                format!("{:?}", hha_core::repcat::StructureRole::from(*role)),
            );
            ctx.report.absorb(m.claim(&h, (*role).into())?);
            Ok(None)
        }
        Command::Yd(Yd::Canonical { alg, variant }) => {
            let h = ctx.algebra(alg)?;
            let v = canonical_yd(&h, *variant)?;
            Ok(Some(json(&ModuleFile::from_bundle(&v))))
        }
        Command::Yd(Yd::Check { alg, module }) => {
            let h = ctx.algebra(alg)?;
            let m = ctx.module("V", module, &h)?;
            ctx.report.absorb(check_yd(&h, &m)?);
            Ok(None)
        }
        Command::Yd(Yd::Braid {
            alg,
            v,
            w,
            hexagons,
        }) => {
            let h = ctx.algebra(alg)?;
            let v = ctx.yd("V", v, &h)?;
            let w = ctx.yd("W", w, &h)?;
            ctx.report
                .finding("braiding", columns(&braiding(&h, &v, &w)?));
            ctx.report.absorb(check_braiding(&h, &v, &w)?);
            if let Some(u) = hexagons {
                let u = ctx.yd("U", u, &h)?;
                ctx.report.absorb(check_hexagons(&h, &u, &v, &w)?);
            }
            Ok(None)
        }
        Command::Symmetry { alg } => {
            let h = ctx.algebra(alg)?;
            let verdict = symmetry_probe(&h)?;
            ctx.report.finding("symmetric", verdict.symmetric);
            if let Some(w) = verdict.witness {
                ctx.report.finding("witness", w);
            }
            Ok(None)
        }
        Command::Fa(Fa::Induce { alg, yd }) => {
            let h = ctx.algebra(alg)?;
            let v = ctx.yd("V", yd, &h)?;
            let m = induce_four_angle(&h, &v)?;
            ctx.report.dim("induced", m.dim());
            Ok(Some(json(&ModuleFile::from_bundle(&m))))
        }
        Command::Fa(Fa::Tensor(p)) => product(ctx, p, false),
        Command::Fa(Fa::Cotensor(p)) => product(ctx, p, true),
        Command::Fa(Fa::Braid { pair, product }) => {
            let h = ctx.algebra(&pair.alg)?;
            let m = ctx.four_angle("M", &pair.m, &h)?;
            let n = ctx.four_angle("N", &pair.n, &h)?;
            let b = match product {
                Product::Tensor => braiding_tensor(&h, &m, &n)?,
                Product::Cotensor => braiding_cotensor(&h, &m, &n)?,
            };
            braiding_findings(ctx, b);
            Ok(None)
        }
        Command::Fa(Fa::Xi(pair)) => {
            let h = ctx.algebra(&pair.alg)?;
            let m = ctx.four_angle("M", &pair.m, &h)?;
            let n = ctx.four_angle("N", &pair.n, &h)?;
            let xi = xi_comparison(&h, &m, &n)?;
            let iso = xi
                .map
                .as_ref()
                .is_some_and(|x| x.is_square() && x.invert().is_ok());
            ctx.report.require("comparison map bijective", iso);
            braiding_findings(ctx, xi);
            Ok(None)
        }
        Command::Equiv(Equiv::Roundtrip { alg, yd, module }) => {
            let h = ctx.algebra(alg)?;
            let v = match yd {
                Some(p) => ctx.yd("V", p, &h)?,
                None => trivial_yd(&h)?,
            };
            let m = match module {
                Some(p) => ctx.four_angle("M", p, &h)?,
                None => FourAngleModule::new(&h, regular(&h)?)?,
            };
            ctx.report.dim("coinvariants", coinvariants(&h, &m)?.dim());
            ctx.report.absorb(roundtrip_check(&h, &v, &m)?);
            Ok(None)
        }
        Command::Hd(Hd::Build { alg, variant, slow }) => {
            let h = ctx.algebra(alg)?;
            let v = SmashVariant::from(*variant);
            if v == SmashVariant::Four && h.dim() > 2 && !slow {
                return Err(Error::InvalidArgument(
                    "the four-factor double over dimension above 2 needs --slow".into(),
                ));
            }
            let s = build_smash(&h, v)?;
            ctx.report.finding("variant", v.name());
            ctx.report.dim("smash", s.dim());
            ctx.report.absorb(s.report);
            Ok(None)
        }
        Command::Hd(Hd::Check { alg, module }) => {
            let h = ctx.algebra(alg)?;
            let m = ctx.module("M", module, &h)?;
            ctx.report.dim("double", h.dim().pow(4));
            ctx.report.absorb(check_double_equivalence(&h, &[m])?);
            Ok(None)
        }
    }
}

fn write_to(path: Option<&Path>, text: &str, stderr: bool) -> std::io::Result<()> {
    match path {
        Some(p) if p != Path::new("-") => std::fs::write(p, text),
        _ if stderr => std::io::stderr().write_all(text.as_bytes()),
        _ => std::io::stdout().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global();
        if let Err(e) = pool {
            eprintln!("hha: cannot start {t} threads: {e}");
            return ExitCode::from(2);
        }
    }

    let mut ctx = Ctx {
        report: ReportFile::new(&command_name(&cli.command), Vec::new()),
        stdin_used: false,
    };
    let start = Instant::now();
    let artifact = match run(&mut ctx, &cli.command) {
        Ok(a) => a,
        Err(e) => {
            ctx.report.error(&e);
            None
        }
    };
    let mut report = ctx.report;
    report.timing.elapsed_ms = start.elapsed().as_millis();
    let code = report.exit_code();

    let producer = produces_file(&cli.command);
    let io = (|| {
        if let Some(a) = &artifact {
            if code == 0 {
                write_to(cli.out.as_deref(), a, false)?;
            }
        }
        if !producer || cli.report.is_some() || code != 0 {
            let text = match cli.format {
                Format::Json => report.to_json(),
                Format::Text => report.to_text(),
            };
            write_to(cli.report.as_deref(), &text, producer)?;
        }
        Ok::<_, std::io::Error>(())
    })();
    if let Err(e) = io {
        eprintln!("hha: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
