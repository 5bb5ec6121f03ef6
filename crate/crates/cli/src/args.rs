use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hha_core::heisenberg::SmashVariant;
use hha_core::repcat::StructureRole;

/// Exact verification of Hom-Hopf algebras, their module categories and
/// Heisenberg doubles. Files are JSON; `-` reads stdin.
///
/// Exit codes: 0 all checks pass, 1 a check failed, 2 malformed input or a
/// violated hypothesis.
#[derive(Debug, Parser)]
#[command(name = "hha", version)]
pub struct Cli {
    /// Worker threads for the linear algebra (default: available cores).
    #[arg(long, global = true, env = "HHA_THREADS")]
    pub threads: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Write the report here instead of the default destination.
    #[arg(long, global = true, value_name = "PATH")]
    pub report: Option<PathBuf>,

    /// Write a produced algebra or module here instead of stdout.
    #[arg(long, short, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate an example algebra.
    #[command(subcommand)]
    Gen(Gen),
    /// Write the dual Hom-Hopf algebra.
    Dual { alg: String },
    #[command(subcommand)]
    Check(Check),
    /// Yetter-Drinfel'd modules.
    #[command(subcommand)]
    Yd(Yd),
    /// Probe whether the braiding on the canonical YD modules is a symmetry.
    Symmetry { alg: String },
    /// Four-angle Hopf modules.
    #[command(subcommand)]
    Fa(Fa),
    /// The equivalence between YD modules and four-angle Hopf modules.
    #[command(subcommand)]
    Equiv(Equiv),
    /// Heisenberg doubles.
    #[command(subcommand)]
    Hd(Hd),
}

#[derive(Debug, Subcommand)]
pub enum Gen {
    /// The cyclic group algebra with g^i·g^j = g^{-(i+j)}.
    Cyclic {
        n: usize,
        /// Characteristic of the ground field.
        #[arg(long, default_value_t = 7, conflicts_with = "rational")]
        p: u64,
        /// Work over the rationals instead.
        #[arg(long)]
        rational: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum Check {
    /// All Hom-Hopf axioms.
    Hopf { alg: String },
    /// The laws of one module structure.
    Module {
        alg: String,
        module: String,
        #[arg(long, value_enum)]
        role: Role,
    },
}

#[derive(Debug, Subcommand)]
pub enum Yd {
    /// Write one of the two YD structures on the algebra itself.
    Canonical {
        alg: String,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        variant: u8,
    },
    Check {
        alg: String,
        module: String,
    },
    /// Check the braiding c_{V,W}, and the hexagons on (U, V, W) if given.
    Braid {
        alg: String,
        v: String,
        w: String,
        #[arg(long, value_name = "U")]
        hexagons: Option<String>,
    },
}

#[derive(Debug, Subcommand)]
pub enum Fa {
    /// Write H⊗V for a YD module V.
    Induce { alg: String, yd: String },
    /// Write M⊗_H N in the coordinates of its subspace basis.
    Tensor(Pair),
    /// Write M□_H N in the coordinates of its subspace basis.
    Cotensor(Pair),
    Braid {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, value_enum)]
        product: Product,
    },
    /// The comparison map M⊗_H N → M□_H N.
    Xi(Pair),
}

#[derive(Debug, Args)]
pub struct Pair {
    pub alg: String,
    pub m: String,
    pub n: String,
}

#[derive(Debug, Subcommand)]
pub enum Equiv {
    /// Both round trips, for V (default trivial) and M (default H).
    Roundtrip {
        alg: String,
        #[arg(long, value_name = "V")]
        yd: Option<String>,
        #[arg(long, value_name = "M")]
        module: Option<String>,
    },
}

#[derive(Debug, Subcommand)]
pub enum Hd {
    /// Build a smash product and check Hom-associativity.
    Build {
        alg: String,
        #[arg(long, value_enum)]
        variant: Variant,
        /// Allow the four-factor double over algebras of dimension above 2.
        #[arg(long)]
        slow: bool,
    },
    /// Check the double-module equivalence on one four-angle module.
    Check { alg: String, module: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Product {
    Tensor,
    Cotensor,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Variant {
    Ll,
    Rl,
    Lr,
    Rr,
    Four,
}

impl From<Variant> for SmashVariant {
    fn from(v: Variant) -> SmashVariant {
        match v {
            Variant::Ll => SmashVariant::LL,
            Variant::Rl => SmashVariant::RL,
            Variant::Lr => SmashVariant::LR,
            Variant::Rr => SmashVariant::RR,
            Variant::Four => SmashVariant::Four,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Role {
    LeftModule,
    RightModule,
    LeftComodule,
    RightComodule,
    Bimodule,
    Bicomodule,
    HopfLl,
    HopfLr,
    HopfRl,
    HopfRr,
    TwoSided,
    FourAngle,
    YetterDrinfeld,
}

impl From<Role> for StructureRole {
    fn from(r: Role) -> StructureRole {
        match r {
            Role::LeftModule => StructureRole::LeftModule,
            Role::RightModule => StructureRole::RightModule,
            Role::LeftComodule => StructureRole::LeftComodule,
            Role::RightComodule => StructureRole::RightComodule,
            Role::Bimodule => StructureRole::Bimodule,
            Role::Bicomodule => StructureRole::Bicomodule,
            Role::HopfLl => StructureRole::HopfLL,
            Role::HopfLr => StructureRole::HopfLR,
            Role::HopfRl => StructureRole::HopfRL,
            Role::HopfRr => StructureRole::HopfRR,
            Role::TwoSided => StructureRole::TwoSided,
            Role::FourAngle => StructureRole::FourAngle,
            Role::YetterDrinfeld => StructureRole::YetterDrinfeld,
        }
    }
}
