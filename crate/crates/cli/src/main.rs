//! `assoc`: command-line frontend for the chord-diagram algebras, associator
//! equation systems, braid relation catalogs and the numeric KZ associator.
//!
//! Exit status is 0 when every check passes or a solve succeeds, 1 when a
//! check fails or a solver meets an obstruction (the report is still
//! written), and 2 on usage or input errors. The number of worker threads is
//! read from `ASSOC_THREADS`.

mod commands;
mod config;
mod output;

use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;

/// Exact computations with chord-diagram Lie algebras and associators.
#[derive(Debug, Parser)]
#[command(name = "assoc", version, about, long_about = None)]
pub struct Cli {
    /// Print the report as a JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Write the report to this file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// TOML file with defaults for unset flags (mu, N, g, n, max-weight, tol,
    /// prec-bits, seed).
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

/// Algebra selection by family name and parameters.
#[derive(Debug, Args, Clone)]
pub struct FamilyArgs {
    /// Family: t, tf, tf-alt, tg, tfg, t1bar, f2 or fg.
    #[arg(long)]
    pub family: String,
    /// Number of strands.
    #[arg(long)]
    pub n: Option<usize>,
    /// Genus (genus families and fg).
    #[arg(long)]
    pub g: Option<usize>,
}

/// Coupling constant and truncation.
#[derive(Debug, Args, Clone)]
pub struct AssocArgs {
    /// Coupling constant mu (rational, e.g. 1 or 3/2).
    #[arg(long, allow_hyphen_values = true)]
    pub mu: Option<String>,
    /// Truncation weight.
    #[arg(long = "N", visible_alias = "truncation")]
    pub truncation: Option<u32>,
    /// Associator series file (as written by solve-assoc); solved from mu
    /// when absent.
    #[arg(long, value_name = "PATH")]
    pub phi: Option<PathBuf>,
}

/// Subcommands.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Graded dimensions of a Lie algebra, as `degree<TAB>dim` lines.
    ///
    /// The algebra is the free graded Lie algebra on the family's generators
    /// modulo its defining relations: for t the symmetry t_ij = t_ji,
    /// locality [t_ij, t_kl] = 0 for disjoint pairs and the four-term relation
    /// [t_ij, t_ik + t_jk] = 0; tf adds central framing chords t_ii; the
    /// genus families add handle generators x_i^a, y_i^a of weight one.
    Dims {
        #[command(flatten)]
        family: FamilyArgs,
        /// Largest weight.
        #[arg(long)]
        max_weight: Option<u32>,
    },
    /// Check that an element brackets to zero with everything up to a weight.
    ///
    /// The element is a generator name (e.g. t11), `c3` for
    /// t12 + t13 + t23, or `@file` with `<lyndon-word> <p>/<q>` lines.
    Central {
        #[command(flatten)]
        family: FamilyArgs,
        /// Element to test.
        #[arg(long)]
        element: String,
        /// Largest weight of the brackets checked.
        #[arg(long)]
        max_weight: Option<u32>,
    },
    /// Check that generator images define a Lie algebra morphism.
    ///
    /// Every defining relation of the source must map to zero in the target.
    /// Without --images each source generator maps to the target generator
    /// of the same name, or to zero if there is none; this covers the
    /// inclusion t_n -> tf_n, the projection tf_n -> t_n killing the t_ii and
    /// the reduction t_{1,n} -> t_{1,n}/(sum x_i, sum y_i).
    HomCheck {
        /// Source family, e.g. t:3, tf:3, tg:1:2 (g:n), t1bar:2, f2, fg:2.
        #[arg(long)]
        src: String,
        /// Target family in the same syntax.
        #[arg(long)]
        tgt: String,
        /// File with a `## <generator>` block of `<lyndon-word> <p>/<q>`
        /// lines per generator; missing generators map to zero.
        #[arg(long, value_name = "PATH")]
        images: Option<PathBuf>,
        /// Largest weight checked.
        #[arg(long)]
        max_weight: Option<u32>,
    },
    /// Cable (double, erase or permute strands of) a Lie element.
    ///
    /// The pattern lists, for each source strand, the group of target strands
    /// it is replaced by, e.g. 12,3 or 1,23; 0 stands for the empty group
    /// (erasure). A strand replaced by the group J sends t_ij to the sum of
    /// t_pj over p in J and x_i^a to the sum of x_p^a over p in J. The
    /// report also lists source relations whose image does not vanish.
    Cable {
        /// Source family, e.g. t:2.
        #[arg(long)]
        src: String,
        /// Target family, e.g. t:3.
        #[arg(long)]
        tgt: String,
        /// Strand pattern.
        #[arg(long)]
        pattern: String,
        /// Element: a generator name, `c3`, or `@file`.
        #[arg(long)]
        element: String,
        /// Truncation weight.
        #[arg(long)]
        max_weight: Option<u32>,
    },
    /// List a relation catalog of parenthesized braids, optionally checking
    /// it under an associator.
    ///
    /// Catalogs: PaBf (framed genus zero: R1, R2, the twist relation
    /// F^{1,2} R^{1,2} F^{2,1} R^{2,1} = F^{12}, hexagons, pentagon),
    /// PaBf_g (framed genus g, including
    /// R^{1,2} R^{2,1} (F^{1,2})^{2(g-1)} = prod_a ((A_a^{1,2})^-1, B_a^{1,2})),
    /// PaBf_g_bis (alternative genus-g presentation in transported
    /// generators), PaB_1 (unframed genus one), LE1 (the reformulated
    /// compatibility relations) and GT_g (symbolic only). With --check the
    /// words are evaluated with a solved associator (and solved genus data
    /// for genus catalogs) and every relation must hold.
    Relations {
        /// Catalog name.
        #[arg(long)]
        catalog: String,
        /// Genus for genus catalogs.
        #[arg(long)]
        g: Option<usize>,
        /// Evaluate both sides and report residuals.
        #[arg(long)]
        check: bool,
        #[command(flatten)]
        assoc: AssocArgs,
    },
    /// Residuals of the associator equations for a series phi.
    ///
    /// Duality phi^{3,2,1} = (phi^{1,2,3})^-1; hexagon
    /// phi^{1,2,3} e^{mu t23/2} phi^{2,3,1} e^{mu t31/2} phi^{3,1,2} e^{mu t12/2}
    /// = e^{mu (t12+t13+t23)/2}; pentagon
    /// phi^{1,2,3} phi^{1,23,4} phi^{2,3,4} = phi^{12,3,4} phi^{1,2,34}.
    /// Products are read as paths, left factor first.
    CheckAssoc {
        #[command(flatten)]
        assoc: AssocArgs,
    },
    /// Solve the associator equations weight by weight over the rationals.
    ///
    /// Writes the series, followed by `# log` lines with the Lie logarithm
    /// and `# weight` lines with the rank data of each step.
    SolveAssoc {
        #[command(flatten)]
        assoc: AssocArgs,
    },
    /// Residuals of the genus-g associator equations for given data.
    ///
    /// For each handle a the data A_{a,+}, A_{a,-} over tf_{g,2} must
    /// satisfy: erasure of the first strand gives 1; the cabling relation
    /// alpha^{1,2,3} alpha^{2,3,1} alpha^{3,1,2} = A^{(12)3} with
    /// alpha = phi^{1,2,3} A^{1,23} e^{mu (t12+t13)/2}; the conjugated
    /// commutator of A_{a,+} and A_{a,-} equal to e^{mu t12}; commutation relations
    /// between different handles; and the product over a of the handle
    /// commutators equal to e^{mu (t12 + 2(g-1) t11)}. Data are solved when
    /// --data is absent.
    CheckGenus {
        #[command(flatten)]
        assoc: AssocArgs,
        /// Genus.
        #[arg(long)]
        g: Option<usize>,
        /// Genus data file (as written by solve-genus).
        #[arg(long, value_name = "PATH")]
        data: Option<PathBuf>,
    },
    /// Solve the genus-g associator equations weight by weight.
    ///
    /// Weight one is fixed to A_{a,+} = exp(x_1^a), A_{a,-} = exp(-mu y_1^a).
    /// On an inconsistent weight the obstruction is reported and the exit
    /// status is 1.
    SolveGenus {
        #[command(flatten)]
        assoc: AssocArgs,
        /// Genus.
        #[arg(long)]
        g: Option<usize>,
    },
    /// Residuals of the elliptic (unframed genus one) equations.
    ///
    /// Standard form: erasure, cabling and
    /// e^{mu t12} = ((A_+^{1,2})^-1, A_-^{1,2}). Alternative form: the same
    /// data transported to A~ = R^{1,2} (A^{2,1})^-1 (R^{1,2})^-1 checked
    /// against its own list, ending with e^{mu t12} = (A~_+, (A~_-)^-1).
    /// Data are solved when --data is absent.
    CheckElliptic {
        #[command(flatten)]
        assoc: AssocArgs,
        /// Elliptic data file (genus-one layout over the unframed algebra).
        #[arg(long, value_name = "PATH")]
        data: Option<PathBuf>,
        /// standard or bis.
        #[arg(long, default_value = "standard")]
        form: String,
    },
    /// Relations and group law of the graded Grothendieck-Teichmueller group.
    ///
    /// For g group-like in x, y: g^{3,2,1} = g^-1, g^{1,2,3} g^{2,3,1} g^{3,1,2} = 1,
    /// t12 + Ad(g^{1,2,3})(t23) + Ad(g^{2,1,3})(t13) = t12 + t13 + t23 and the
    /// pentagon. With --random K, K random elements test associativity and
    /// the unit law of the product, and rescaling by random factors is
    /// checked to preserve the residual status of the input. With --genus,
    /// the identity tuple of the genus-g group is checked.
    CheckGrt {
        /// Series file for g; the identity when absent.
        #[arg(long, value_name = "PATH")]
        element: Option<PathBuf>,
        /// Scaling parameter lambda.
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        lambda: String,
        /// Truncation for the identity and random elements.
        #[arg(long = "N")]
        truncation: Option<u32>,
        /// Number of random elements for the group law checks.
        #[arg(long, default_value_t = 0)]
        random: usize,
        /// Seed of the random elements.
        #[arg(long)]
        seed: Option<u64>,
        /// Check the identity of the genus-g group instead.
        #[arg(long)]
        genus: Option<usize>,
    },
    /// Relations and group law of the Grothendieck-Teichmueller group.
    ///
    /// For (lambda, f) with nu = (lambda-1)/2: f(x,y) = f(y,x)^-1;
    /// x1^nu f(x1,x2) x2^nu f(x2,x3) x3^nu f(x3,x1) = 1 with x1 x2 x3 = 1; and
    /// the pure braid relation on four strands
    /// f(x13 x23, x34) f(x12, x23 x24) = f(x12, x23) f(x12 x13, x24 x34) f(x23, x34),
    /// with x_ij transported to chord diagrams by an associator.
    CheckGt {
        /// Series file for f; the identity when absent.
        #[arg(long, value_name = "PATH")]
        element: Option<PathBuf>,
        /// Parameter lambda.
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        lambda: String,
        #[command(flatten)]
        assoc: AssocArgs,
        /// Number of random elements for the group law checks.
        #[arg(long, default_value_t = 0)]
        random: usize,
        /// Seed of the random elements.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Flatness of the KZ connection on n points.
    ///
    /// The form sum_i t_ii dlog(lambda_i) + sum_{i<j} t_ij dlog(z_i - z_j)
    /// (the first sum only with --framed) satisfies w ^ w = 0 after the
    /// Arnold relations; the check reports each block of the expansion.
    Flatness {
        /// Number of points.
        #[arg(long)]
        n: Option<usize>,
        /// Include the framing forms.
        #[arg(long)]
        framed: bool,
        /// Reduce in the algebra without four-term relations (negative
        /// control).
        #[arg(long)]
        drop_four_term: bool,
    },
    /// Numeric KZ associator by transport of dG = (x/z + y/(z-1)) G dz.
    ///
    /// Prints `<word> <re> <im>` coefficient lines, the change under
    /// doubling the precision, the [x,y] coefficient of the logarithm
    /// against -pi^2/6, the associator residuals at mu = 2 pi i and the
    /// framed loop monodromies (framing loop against e^{2 pi i t11}, T(f_1)
    /// against T(sigma_1)^2).
    KzTransport {
        /// Truncation weight (at most 6).
        #[arg(long)]
        weight: Option<u32>,
        /// Working precision: 128, 256 or 512.
        #[arg(long)]
        prec_bits: Option<u32>,
        /// Tolerance for the numeric checks.
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Evaluate a parenthesized braid word as a group-like chord series.
    ///
    /// R^{1,2} maps to e^{mu t12/2} with the strands swapped, F^{1,2} to
    /// e^{mu t11} (the framing parameter equals mu), Phi^{1,2,3} to the
    /// associator, and the handle letters A_a, B_a to the genus data. Inverses are written with a trailing `!`.
    BraidEval {
        /// Source object, e.g. (12)3.
        #[arg(long)]
        source: String,
        /// Word, e.g. "R^{1,2} Phi^{2,1,3}!".
        #[arg(long)]
        word: String,
        #[command(flatten)]
        assoc: AssocArgs,
        /// Evaluate without framing.
        #[arg(long)]
        unframed: bool,
        /// Genus for words with handle letters (data are solved).
        #[arg(long)]
        g: Option<usize>,
    },
}

fn configure_threads() -> Result<(), String> {
    if let Ok(v) = std::env::var("ASSOC_THREADS") {
        let n: usize = v.trim().parse().map_err(|_| format!("ASSOC_THREADS must be a number, got '{v}'"))?;
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| e.to_string())?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    match commands::run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
