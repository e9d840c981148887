//! Command-line front end. All expansions are emitted under a versioned
//! header as exact-rational lines sorted by key, so golden files are stable
//! across runs and worker counts.

use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::alg::lincomb::{antipode, coproduct, product, HopfAlg, Tensor, Vect};
use crate::alg::{ck, kernel, lr, morphism, nck, nsym, qsym, ssym, sym, ysym};
use crate::error::{invalid, Result};
use crate::forest::Forest;
use crate::lit;
use crate::perm::Permutation;
use crate::poset::{Element, Family, MapName, Poset};
use crate::tree::Tree;

pub const HEADER: &str = "hopf-trees/1";

pub const WORKERS_ENV: &str = "HOPF_TREES_WORKERS";

/// Subcommand-to-operation bindings, consumed by the coverage test: every
/// library operation is reachable from at least one subcommand.
pub const BINDINGS: &[(&str, &str)] = &[
    ("product", "ssym_product_F"),
    ("product", "ssym_product_M"),
    ("product", "ysym_product_F"),
    ("product", "ysym_product_M"),
    ("product", "qsym_product_M"),
    ("product", "qsym_product_F"),
    ("product", "nsym_product_Mstar"),
    ("product", "sym_product_h"),
    ("product", "lr_product_Mstar"),
    ("product", "nck_product"),
    ("product", "ck_structure"),
    ("coproduct", "ssym_coproduct_F"),
    ("coproduct", "ssym_coproduct_M"),
    ("coproduct", "ysym_coproduct_F"),
    ("coproduct", "ysym_coproduct_M"),
    ("coproduct", "qsym_coproduct_M"),
    ("coproduct", "qsym_coproduct_F"),
    ("coproduct", "nsym_coproduct_Mstar"),
    ("coproduct", "nsym_coproduct_dualized"),
    ("coproduct", "sym_coproduct_h"),
    ("coproduct", "lr_coproduct_Mstar"),
    ("coproduct", "nck_coproduct"),
    ("antipode", "antipode_generic"),
    ("antipode", "antipode_ysym_M_explicit"),
    ("convert", "ssym_m_to_f"),
    ("convert", "ssym_f_to_m"),
    ("convert", "ysym_m_to_f"),
    ("convert", "ysym_f_to_m"),
    ("convert", "qsym_m_to_f"),
    ("convert", "qsym_f_to_m"),
    ("map", "poset_map_apply"),
    ("map", "morphism_apply"),
    ("map", "splitting_apply"),
    ("map", "involution_apply"),
    ("map", "Phi"),
    ("map", "Phi_inverse"),
    ("map", "U"),
    ("map", "embed_nsym"),
    ("map", "project_sym"),
    ("mobius", "poset_leq"),
    ("mobius", "poset_covers"),
    ("mobius", "poset_interval"),
    ("mobius", "poset_moebius"),
    ("mobius", "poset_mobius_row"),
    ("kernel", "hopf_kernel_basis"),
    ("kernel", "cocycle"),
    ("primitives", "primitives_basis"),
    ("primitives", "coradical_level"),
    ("verify", "verification_suites"),
    ("verify", "check_galois"),
    ("verify", "check_order_preserving"),
    ("verify", "rota_transfer_check"),
    ("verify", "grading_check"),
    ("verify", "diagram_check_CK"),
    ("dims", "kernel_dims"),
    ("dims", "catalan_number"),
];

#[derive(Parser)]
#[command(name = "hopf-trees", version, about = "Exact Hopf-algebra computations on permutations, trees, and forests", disable_help_subcommand = true)]
pub struct Cli {
    /// Directory for the serialized Moebius memo
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,

    /// Worker threads for verification (default from HOPF_TREES_WORKERS)
    #[arg(long, global = true)]
    workers: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Multiply two basis elements
    Product {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        basis: Option<String>,
        x: String,
        y: String,
    },
    /// Expand the coproduct of a basis element
    Coproduct {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        basis: Option<String>,
        /// dual-coproduct route (lr, nsym): dualize | admissible | intermediate
        #[arg(long)]
        route: Option<String>,
        x: String,
    },
    /// Apply the antipode to a basis element
    Antipode {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        basis: Option<String>,
        /// use the closed monomial-basis formula (ysym M only)
        #[arg(long)]
        explicit: bool,
        x: String,
    },
    /// Change between the monomial and fundamental bases
    Convert {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        x: String,
    },
    /// Apply a poset map, Hopf morphism, splitting, involution, or
    /// structural isomorphism
    Map {
        /// poset | morphism | splitting | involution | iso
        #[arg(long)]
        kind: String,
        #[arg(long)]
        name: String,
        #[arg(long)]
        basis: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        /// embedding target for embed-nsym: nck | lr
        #[arg(long)]
        target: Option<String>,
        operand: String,
    },
    /// Order and Moebius-function queries on the module posets
    Mobius {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        /// leq | covers | interval | mu | row
        #[arg(long, default_value = "mu")]
        op: String,
        x: String,
        y: Option<String>,
    },
    /// Hopf-kernel bases and crossed-product cocycle values
    Kernel {
        /// lambda | l
        #[arg(long)]
        which: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        /// lambda-gamma | l-c | d-z
        #[arg(long)]
        cocycle: Option<String>,
        operands: Vec<String>,
    },
    /// Primitive basis of the tree algebra and coradical levels
    Primitives {
        #[arg(long)]
        n: Option<usize>,
        /// report the coradical level of one tree instead
        #[arg(long)]
        level: Option<String>,
    },
    /// Run a named verification suite
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Closed dimension formulas
    Dims {
        /// kernel | primitives | basis
        #[arg(long)]
        what: String,
        #[arg(long)]
        n: usize,
    },
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.exit_code() == 0 { 0 } else { 2 };
            let _ = e.print();
            return code;
        }
    };
    let workers = cli.workers.or_else(|| {
        std::env::var(WORKERS_ENV).ok().and_then(|v| v.parse().ok())
    });
    if let Some(w) = workers {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(w).build_global();
    }
    if let Some(dir) = &cli.cache_dir {
        if let Err(e) = crate::poset::load_mobius_cache(dir) {
            eprintln!("error: cannot load cache: {e}");
            return 2;
        }
    }
    let outcome = execute(&cli.command);
    if let Some(dir) = &cli.cache_dir {
        if let Err(e) = crate::poset::save_mobius_cache(dir) {
            eprintln!("error: cannot save cache: {e}");
            return 2;
        }
    }
    match outcome {
        Ok((text, code)) => {
            print!("{text}");
            code
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

/// Execute one subcommand, returning the full output text and exit status.
pub fn execute(command: &Command) -> Result<(String, i32)> {
    match command {
        Command::Product { algebra, basis, x, y } => {
            Ok((product_cmd(algebra, basis.as_deref(), x, y)?, 0))
        }
        Command::Coproduct { algebra, basis, route, x } => {
            Ok((coproduct_cmd(algebra, basis.as_deref(), route.as_deref(), x)?, 0))
        }
        Command::Antipode { algebra, basis, explicit, x } => {
            Ok((antipode_cmd(algebra, basis.as_deref(), *explicit, x)?, 0))
        }
        Command::Convert { algebra, from, to, x } => Ok((convert_cmd(algebra, from, to, x)?, 0)),
        Command::Map { kind, name, basis, n, target, operand } => Ok((
            map_cmd(kind, name, basis.as_deref(), *n, target.as_deref(), operand)?,
            0,
        )),
        Command::Mobius { family, n, op, x, y } => {
            Ok((mobius_cmd(family, *n, op, x, y.as_deref())?, 0))
        }
        Command::Kernel { which, n, cocycle, operands } => {
            kernel_cmd(which.as_deref(), *n, cocycle.as_deref(), operands)
        }
        Command::Primitives { n, level } => Ok((primitives_cmd(*n, level.as_deref())?, 0)),
        Command::Verify { suite, max_n } => verify_cmd(suite, *max_n),
        Command::Dims { what, n } => Ok((dims_cmd(what, *n)?, 0)),
    }
}

fn render_vect<A: HopfAlg>(v: &Vect<A::Key>) -> String {
    let mut lines: Vec<String> = v
        .0
        .iter()
        .map(|(k, c)| format!("{}/{}\t{}\t{}", c.numer(), c.denom(), A::BASIS_ID, A::key_string(k)))
        .collect();
    lines.sort();
    let mut out = String::from(HEADER);
    out.push('\n');
    for l in lines {
        out.push_str(&l);
        out.push('\n');
    }
    out
}

fn render_tensor<A: HopfAlg>(t: &Tensor<A::Key>) -> String {
    let mut lines: Vec<String> = t
        .0
        .iter()
        .map(|((a, b), c)| {
            format!(
                "{}/{}\t{}\t{} \u{2297} {}",
                c.numer(),
                c.denom(),
                A::BASIS_ID,
                A::key_string(a),
                A::key_string(b)
            )
        })
        .collect();
    lines.sort();
    let mut out = String::from(HEADER);
    out.push('\n');
    for l in lines {
        out.push_str(&l);
        out.push('\n');
    }
    out
}

/// The eleven (algebra, basis) selections.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Selector {
    SsymF,
    SsymM,
    YsymF,
    YsymM,
    QsymM,
    QsymF,
    Nsym,
    Sym,
    Lr,
    Nck,
    Ck,
}

fn selector(algebra: &str, basis: Option<&str>) -> Result<Selector> {
    Ok(match (algebra, basis) {
        ("ssym", Some("F")) => Selector::SsymF,
        ("ssym", Some("M") | None) => Selector::SsymM,
        ("ysym", Some("F")) => Selector::YsymF,
        ("ysym", Some("M") | None) => Selector::YsymM,
        ("qsym", Some("M") | None) => Selector::QsymM,
        ("qsym", Some("F")) => Selector::QsymF,
        ("nsym", Some("Mstar") | None) => Selector::Nsym,
        ("sym", Some("h") | None) => Selector::Sym,
        ("lr", Some("Mstar") | None) => Selector::Lr,
        ("nck", Some("forest") | None) => Selector::Nck,
        ("ck", Some("uforest") | None) => Selector::Ck,
        _ => {
            return Err(invalid(format!(
                "unknown algebra/basis selection \"{algebra}\"/\"{}\"",
                basis.unwrap_or("-")
            )))
        }
    })
}

fn parse_ck(s: &str) -> Result<Forest> {
    Ok(lit::parse_forest(s)?.unorder())
}

macro_rules! dispatch {
    ($sel:expr, $f:ident, $($arg:expr),*) => {
        match $sel {
            Selector::SsymF => $f::<ssym::SsymF>(&lit::parse_perm, $($arg),*),
            Selector::SsymM => $f::<ssym::SsymM>(&lit::parse_perm, $($arg),*),
            Selector::YsymF => $f::<ysym::YsymF>(&lit::parse_tree, $($arg),*),
            Selector::YsymM => $f::<ysym::YsymM>(&lit::parse_tree, $($arg),*),
            Selector::QsymM => $f::<qsym::QsymM>(&lit::parse_composition, $($arg),*),
            Selector::QsymF => $f::<qsym::QsymF>(&lit::parse_composition, $($arg),*),
            Selector::Nsym => $f::<nsym::NsymMstar>(&lit::parse_composition, $($arg),*),
            Selector::Sym => $f::<sym::SymH>(&lit::parse_partition, $($arg),*),
            Selector::Lr => $f::<lr::LrMstar>(&lit::parse_tree, $($arg),*),
            Selector::Nck => $f::<nck::Nck>(&lit::parse_forest, $($arg),*),
            Selector::Ck => $f::<ck::Ck>(&parse_ck, $($arg),*),
        }
    };
}

fn do_product<A: HopfAlg>(
    parse: &dyn Fn(&str) -> Result<A::Key>,
    x: &str,
    y: &str,
) -> Result<String> {
    let a = parse(x)?;
    let b = parse(y)?;
    Ok(render_vect::<A>(&product::<A>(&Vect::basis(a), &Vect::basis(b))))
}

fn do_coproduct<A: HopfAlg>(parse: &dyn Fn(&str) -> Result<A::Key>, x: &str) -> Result<String> {
    let a = parse(x)?;
    Ok(render_tensor::<A>(&coproduct::<A>(&Vect::basis(a))))
}

fn do_antipode<A: HopfAlg>(parse: &dyn Fn(&str) -> Result<A::Key>, x: &str) -> Result<String> {
    let a = parse(x)?;
    Ok(render_vect::<A>(&antipode::<A>(&Vect::basis(a))))
}

fn product_cmd(algebra: &str, basis: Option<&str>, x: &str, y: &str) -> Result<String> {
    let sel = selector(algebra, basis)?;
    dispatch!(sel, do_product, x, y)
}

fn coproduct_cmd(algebra: &str, basis: Option<&str>, route: Option<&str>, x: &str) -> Result<String> {
    let sel = selector(algebra, basis)?;
    match (sel, route) {
        (Selector::Lr, Some(route)) => {
            let r = lr::CoproductRoute::parse(route)?;
            let t = lit::parse_tree(x)?;
            Ok(render_tensor::<lr::LrMstar>(&lr::coproduct_route(&t, r)))
        }
        (Selector::Nsym, Some("dualize")) => {
            let alpha = lit::parse_composition(x)?;
            Ok(render_tensor::<nsym::NsymMstar>(&nsym::coproduct_dualized(&alpha)))
        }
        (_, Some(route)) => Err(invalid(format!(
            "route \"{route}\" is not available for algebra \"{algebra}\""
        ))),
        (_, None) => dispatch!(sel, do_coproduct, x),
    }
}

fn antipode_cmd(algebra: &str, basis: Option<&str>, explicit: bool, x: &str) -> Result<String> {
    let sel = selector(algebra, basis)?;
    if explicit {
        if sel != Selector::YsymM {
            return Err(invalid("--explicit applies only to the ysym monomial basis"));
        }
        let t = lit::parse_tree(x)?;
        return Ok(render_vect::<ysym::YsymM>(&ysym::antipode_m_explicit(&t)));
    }
    dispatch!(sel, do_antipode, x)
}

fn convert_cmd(algebra: &str, from: &str, to: &str, x: &str) -> Result<String> {
    match (algebra, from, to) {
        ("ssym", "M", "F") => {
            let v = Vect::basis(lit::parse_perm(x)?);
            Ok(render_vect::<ssym::SsymF>(&ssym::m_to_f(&v)))
        }
        ("ssym", "F", "M") => {
            let v = Vect::basis(lit::parse_perm(x)?);
            Ok(render_vect::<ssym::SsymM>(&ssym::f_to_m(&v)))
        }
        ("ysym", "M", "F") => {
            let v = Vect::basis(lit::parse_tree(x)?);
            Ok(render_vect::<ysym::YsymF>(&ysym::m_to_f(&v)))
        }
        ("ysym", "F", "M") => {
            let v = Vect::basis(lit::parse_tree(x)?);
            Ok(render_vect::<ysym::YsymM>(&ysym::f_to_m(&v)))
        }
        ("qsym", "M", "F") => {
            let v = Vect::basis(lit::parse_composition(x)?);
            Ok(render_vect::<qsym::QsymF>(&qsym::m_to_f(&v)))
        }
        ("qsym", "F", "M") => {
            let v = Vect::basis(lit::parse_composition(x)?);
            Ok(render_vect::<qsym::QsymM>(&qsym::f_to_m(&v)))
        }
        _ => Err(invalid(format!(
            "no conversion {from} -> {to} for algebra \"{algebra}\""
        ))),
    }
}

fn map_cmd(
    kind: &str,
    name: &str,
    basis: Option<&str>,
    n: Option<usize>,
    target: Option<&str>,
    operand: &str,
) -> Result<String> {
    match kind {
        "poset" => {
            let m = MapName::parse(name)?;
            let n = n.ok_or_else(|| invalid("--n is required for poset maps"))?;
            let x = parse_element(m.source(n).family, n, operand)?;
            let y = m.apply(&x, n)?;
            Ok(format!("{HEADER}\n{}\n", y.key()))
        }
        "morphism" => {
            let basis = basis.unwrap_or("M");
            match (name, basis) {
                ("d", "F") => {
                    let v = Vect::basis(lit::parse_perm(operand)?);
                    Ok(render_vect::<qsym::QsymF>(&morphism::d_on_f(&v)))
                }
                ("d", "M") => {
                    let v = Vect::basis(lit::parse_perm(operand)?);
                    Ok(render_vect::<qsym::QsymM>(&morphism::d_on_m(&v)))
                }
                ("lambda", "F") => {
                    let v = Vect::basis(lit::parse_perm(operand)?);
                    Ok(render_vect::<ysym::YsymF>(&morphism::lambda_on_f(&v)))
                }
                ("lambda", "M") => {
                    let v = Vect::basis(lit::parse_perm(operand)?);
                    Ok(render_vect::<ysym::YsymM>(&morphism::lambda_on_m(&v)))
                }
                ("l", "F") => {
                    let v = Vect::basis(lit::parse_tree(operand)?);
                    Ok(render_vect::<qsym::QsymF>(&morphism::l_on_f(&v)))
                }
                ("l", "M") => {
                    let v = Vect::basis(lit::parse_tree(operand)?);
                    Ok(render_vect::<qsym::QsymM>(&morphism::l_on_m(&v)))
                }
                _ => Err(invalid(format!("unknown morphism \"{name}\" on basis \"{basis}\""))),
            }
        }
        "splitting" => match name {
            "gamma" => {
                let v = Vect::basis(lit::parse_tree(operand)?);
                Ok(render_vect::<ssym::SsymM>(&morphism::gamma_split(&v)))
            }
            "c" => {
                let v = Vect::basis(lit::parse_composition(operand)?);
                Ok(render_vect::<ysym::YsymM>(&morphism::c_split(&v)))
            }
            "z" => {
                let v = Vect::basis(lit::parse_composition(operand)?);
                Ok(render_vect::<ssym::SsymM>(&morphism::z_split(&v)))
            }
            _ => Err(invalid(format!("unknown splitting \"{name}\""))),
        },
        "involution" => match name {
            "ysym" => {
                let v = Vect::basis(lit::parse_tree(operand)?);
                Ok(render_vect::<ysym::YsymM>(&ysym::involution(&v)))
            }
            "qsym" => {
                let v = Vect::basis(lit::parse_composition(operand)?);
                Ok(render_vect::<qsym::QsymM>(&qsym::involution(&v)))
            }
            "nck" => {
                let v = Vect::basis(lit::parse_forest(operand)?);
                Ok(render_vect::<nck::Nck>(&nck::involution(&v)))
            }
            _ => Err(invalid(format!("no involution for algebra \"{name}\""))),
        },
        "iso" => match name {
            "phi" => {
                let v = Vect::basis(lit::parse_forest(operand)?);
                Ok(render_vect::<lr::LrMstar>(&nck::phi_vect(&v)))
            }
            "phi-inv" => {
                let v = Vect::basis(lit::parse_tree(operand)?);
                Ok(render_vect::<nck::Nck>(&nck::phi_inverse_vect(&v)))
            }
            "u" => {
                let v = Vect::basis(lit::parse_forest(operand)?);
                Ok(render_vect::<ck::Ck>(&ck::u_map(&v)))
            }
            "embed-nsym" => {
                let alpha = lit::parse_composition(operand)?;
                match ck::NsymTarget::parse(target.unwrap_or("nck"))? {
                    ck::NsymTarget::Nck => Ok(render_vect::<nck::Nck>(&Vect::basis(
                        ck::embed_nsym_forest(&alpha),
                    ))),
                    ck::NsymTarget::LrDual => Ok(render_vect::<lr::LrMstar>(&Vect::basis(
                        ck::embed_nsym_tree(&alpha),
                    ))),
                }
            }
            "project-sym" => {
                let v = Vect::basis(lit::parse_composition(operand)?);
                Ok(render_vect::<sym::SymH>(&ck::project_sym(&v)))
            }
            _ => Err(invalid(format!("unknown isomorphism \"{name}\""))),
        },
        _ => Err(invalid(format!("unknown map kind \"{kind}\""))),
    }
}

fn parse_element(family: Family, n: usize, s: &str) -> Result<Element> {
    Ok(match family {
        Family::Weak => Element::Perm(lit::parse_perm(s)?),
        Family::Tamari => Element::Tree(lit::parse_tree(s)?),
        Family::Boolean => Element::Set(lit::parse_subset(s, n.saturating_sub(1))?),
    })
}

fn mobius_cmd(family: &str, n: usize, op: &str, x: &str, y: Option<&str>) -> Result<String> {
    let family = Family::parse(family)?;
    let poset = Poset::new(family, n);
    let x = parse_element(family, n, x)?;
    let need_y = || -> Result<Element> {
        parse_element(family, n, y.ok_or_else(|| invalid("this query needs two elements"))?)
    };
    let mut out = String::from(HEADER);
    out.push('\n');
    match op {
        "leq" => {
            out.push_str(if poset.leq(&x, &need_y()?)? { "true\n" } else { "false\n" });
        }
        "covers" => {
            for e in poset.covers(&x)? {
                out.push_str(&e.key());
                out.push('\n');
            }
        }
        "interval" => {
            let mut keys: Vec<String> =
                poset.interval(&x, &need_y()?)?.iter().map(Element::key).collect();
            keys.sort();
            for k in keys {
                out.push_str(&k);
                out.push('\n');
            }
        }
        "mu" => {
            out.push_str(&format!("{}\n", poset.moebius(&x, &need_y()?)?));
        }
        "row" => {
            let row = poset.mobius_row(&x);
            let mut lines: Vec<String> =
                row.iter().map(|(k, v)| format!("{k}\t{v}")).collect();
            lines.sort();
            for l in lines {
                out.push_str(&l);
                out.push('\n');
            }
        }
        _ => return Err(invalid(format!("unknown mobius op \"{op}\""))),
    }
    Ok(out)
}

fn kernel_cmd(
    which: Option<&str>,
    n: Option<usize>,
    cocycle: Option<&str>,
    operands: &[String],
) -> Result<(String, i32)> {
    if let Some(pair) = cocycle {
        let pair = kernel::CocyclePair::parse(pair)?;
        let [k, kp] = operands else {
            return Err(invalid("cocycle evaluation takes exactly two operands"));
        };
        let (text, ok) = match pair {
            kernel::CocyclePair::LambdaGamma => {
                let v = kernel::cocycle_lambda_gamma(&lit::parse_tree(k)?, &lit::parse_tree(kp)?);
                (render_vect::<ssym::SsymM>(&v), kernel::in_lambda_kernel(&v))
            }
            kernel::CocyclePair::LC => {
                let v = kernel::cocycle_l_c(
                    &lit::parse_composition(k)?,
                    &lit::parse_composition(kp)?,
                );
                (render_vect::<ysym::YsymM>(&v), kernel::in_l_kernel(&v))
            }
            kernel::CocyclePair::DZ => {
                let v = kernel::cocycle_d_z(
                    &lit::parse_composition(k)?,
                    &lit::parse_composition(kp)?,
                );
                (render_vect::<ssym::SsymM>(&v), kernel::in_d_kernel(&v))
            }
        };
        if !ok {
            return Ok((format!("{text}cocycle value escapes the kernel\n"), 1));
        }
        return Ok((text, 0));
    }
    let n = n.ok_or_else(|| invalid("--n is required to list a kernel basis"))?;
    match which.unwrap_or("lambda") {
        "lambda" => {
            let mut v: Vect<Permutation> = Vect::zero();
            for s in kernel::kernel_basis_lambda(n) {
                v.add_term(s, crate::alg::lincomb::scalar(1));
            }
            Ok((render_vect::<ssym::SsymM>(&v), 0))
        }
        "l" => {
            let mut v: Vect<Tree> = Vect::zero();
            for t in kernel::kernel_basis_l(n) {
                v.add_term(t, crate::alg::lincomb::scalar(1));
            }
            Ok((render_vect::<ysym::YsymM>(&v), 0))
        }
        other => Err(invalid(format!("unknown kernel \"{other}\""))),
    }
}

fn primitives_cmd(n: Option<usize>, level: Option<&str>) -> Result<String> {
    if let Some(t) = level {
        let t = lit::parse_tree(t)?;
        return Ok(format!("{HEADER}\n{}\n", ysym::coradical_level(&t)));
    }
    let n = n.ok_or_else(|| invalid("--n is required to list the primitive basis"))?;
    let mut v: Vect<Tree> = Vect::zero();
    for t in ysym::primitives_basis(n) {
        v.add_term(t, crate::alg::lincomb::scalar(1));
    }
    Ok(render_vect::<ysym::YsymM>(&v))
}

fn verify_cmd(suite: &str, max_n: Option<usize>) -> Result<(String, i32)> {
    let names: Vec<&str> = if suite == "all" {
        crate::verify::SUITE_NAMES.to_vec()
    } else {
        vec![suite]
    };
    let mut out = String::new();
    let mut failed = false;
    for name in names {
        let report = crate::verify::run_suite(name, max_n)?;
        if report.ok() {
            out.push_str(&format!(
                "suite {} max-n={} checks={} pass\n",
                report.suite, report.max_n, report.checks
            ));
        } else {
            failed = true;
            out.push_str(&format!(
                "suite {} max-n={} checks={} FAIL: {}\n",
                report.suite,
                report.max_n,
                report.checks,
                report.first_counterexample().unwrap_or("")
            ));
        }
    }
    Ok((out, i32::from(failed)))
}

fn dims_cmd(what: &str, n: usize) -> Result<String> {
    match what {
        "kernel" => {
            let (a, b) = kernel::kernel_dims(n);
            Ok(format!("a_{n}={a} b_{n}={b}\n"))
        }
        "primitives" => Ok(format!(
            "p_{n}={}\n",
            crate::tree::catalan_number(n.saturating_sub(1))
        )),
        "basis" => Ok(format!("c_{n}={}\n", crate::tree::catalan_number(n))),
        _ => Err(invalid(format!("unknown dimension query \"{what}\""))),
    }
}
