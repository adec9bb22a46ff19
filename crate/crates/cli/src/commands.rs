use std::fmt::Write as _;

use fricke::family::kappa::{parse_list, parse_triple};
use fricke::family::{
    build_kappa, class_gram, critical_points, critical_values, lines_on_fiber, sphere_character, torus_character,
    traces_to_params, KappaParams, Sl2,
};
use fricke::group::{
    gamma_to_s4, horowitz_decompose, is_automorphism, jacobian_sign, word_to_map, GroupWord,
};
use fricke::homology::{
    basis_change, homology_action, intersection_form, link_h1, link_h1_from_euler, link_monodromy, Basis,
};
use fricke::{json, parse_poly_map, parse_rational, smith_normal_form, Error, IntMatrix, Integer, Map3, Result};
use serde_json::{json, Value};

use crate::{AutCmd, Command, HomologyCmd, KappaCmd, LinkCmd, MapInput, WitnessCmd};

pub struct Output {
    pub text: String,
    pub json: Value,
}

fn out(text: String, json: Value) -> Result<Output> {
    Ok(Output { text, json })
}

pub fn run(c: &Command) -> Result<Output> {
    match c {
        Command::Kappa(KappaCmd::Eval { params, point }) => kappa_eval(params, point),
        Command::Singular { params } => singular(params),
        Command::Aut(cmd) => aut(cmd),
        Command::Homology(cmd) => homology(cmd),
        Command::Link(cmd) => link(cmd),
        Command::Lines { t, gram } => lines(t, *gram),
        Command::Traces { boundary } => traces(boundary),
        Command::Witness(cmd) => witness(cmd),
        Command::Snf { matrix } => snf(matrix),
    }
}

fn point_text(p: &[fricke::Rational]) -> String {
    let parts: Vec<String> = p.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

fn kappa_eval(params: &str, point: &str) -> Result<Output> {
    let p = KappaParams::parse(params)?;
    let x = parse_triple(point)?;
    let v = build_kappa(&p).eval(&x);
    out(
        format!("kappa{} at {} = {v}\n", p, point_text(&x)),
        json!({ "params": json::params(&p), "point": json::rationals(&x), "value": json::rational(&v) }),
    )
}

fn singular(params: &str) -> Result<Output> {
    let p = KappaParams::parse(params)?;
    let pts = critical_points(&p);
    let values = critical_values(&p);
    let total: u32 = pts.iter().map(|c| c.total_multiplicity()).sum();
    let mut text = format!("critical points at (P, Q, R) = {p}\n");
    for c in &pts {
        writeln!(text, "  {c}").unwrap();
    }
    text.push_str("critical values\n");
    let width = values.iter().map(|(v, _)| v.to_string().len()).max().unwrap_or(0);
    for (v, m) in &values {
        writeln!(text, "  {:<width$}  x{m}", v.to_string()).unwrap();
    }
    writeln!(text, "total Milnor number {total}").unwrap();
    let json = json!({
        "params": json::params(&p),
        "points": pts.iter().map(json::critical_point).collect::<Vec<_>>(),
        "values": values.iter().map(|(v, m)| json!({ "value": json::critical_value(v), "multiplicity": m })).collect::<Vec<_>>(),
        "total_milnor_number": total,
    });
    out(text, json)
}

fn input_map(input: &MapInput) -> Result<(Map3, KappaParams, Option<GroupWord>)> {
    let p = KappaParams::parse(&input.params)?;
    match (&input.map, &input.word) {
        (Some(m), _) => Ok((parse_poly_map(m)?, p, None)),
        (None, Some(w)) => {
            let w = GroupWord::parse(w)?;
            Ok((word_to_map(&w, &p)?, p, Some(w)))
        }
        (None, None) => Err(Error::Parse { position: 0, message: "one of --map or --word is required".into() }),
    }
}

fn aut(cmd: &AutCmd) -> Result<Output> {
    match cmd {
        AutCmd::Check(input) => {
            let (f, p, _) = input_map(input)?;
            let ok = is_automorphism(&f, &p);
            let jac = jacobian_sign(&f).ok();
            let jac_text = jac.map_or("not a constant unit".to_string(), |s| s.to_string());
            out(
                format!("map          {f}\nautomorphism {}\njacobian     {jac_text}\n", if ok { "yes" } else { "no" }),
                json!({ "map": json::poly_map(&f), "params": json::params(&p), "automorphism": ok, "jacobian": jac }),
            )
        }
        AutCmd::Apply { input, point } => {
            let (f, p, w) = input_map(input)?;
            let mut text = String::new();
            if let Some(w) = &w {
                writeln!(text, "word  {w}").unwrap();
            }
            writeln!(text, "map   {f}").unwrap();
            let mut json = json!({ "map": json::poly_map(&f), "params": json::params(&p) });
            if let Some(w) = &w {
                json["word"] = json::word(w);
            }
            if let Some(pt) = point {
                let x = parse_triple(pt)?;
                let y = f.eval(&x)?;
                writeln!(text, "image {} -> {}", point_text(&x), point_text(&y)).unwrap();
                json["point"] = json::rationals(&x);
                json["image"] = json::rationals(&y);
            }
            out(text, json)
        }
        AutCmd::Decompose(input) => {
            let (f, p, _) = input_map(input)?;
            let d = horowitz_decompose(&f, &p)?;
            let letters: Vec<&str> = d.word.letters.iter().map(|g| g.letter()).collect();
            let degrees: Vec<String> = d.degrees.iter().map(ToString::to_string).collect();
            let word = if letters.is_empty() { "(empty)".to_string() } else { letters.join(" ") };
            out(
                format!("word    {word}\ntail    {}\ndegrees {}\n", d.tail(), degrees.join(" ")),
                json::decomposition(&d),
            )
        }
    }
}

fn homology(cmd: &HomologyCmd) -> Result<Output> {
    match cmd {
        HomologyCmd::Action { word } => {
            let w = GroupWord::parse(word)?;
            let f = word_to_map(&w, &KappaParams::zero())?;
            let m = homology_action(&f)?;
            let (perm, sign) = gamma_to_s4(&f)?;
            let mut json = json::int_matrix(&m, Some(Basis::VanishingCycle.tag()));
            json["permutation"] = json::perm(&perm);
            json["sign"] = json!(sign);
            out(format!("permutation {perm}  sign {sign:+}\nbasis vanishing_cycle\n{m}"), json)
        }
        HomologyCmd::Form { basis } => {
            let f = intersection_form(Basis::parse(basis)?);
            out(format!("basis {}\n{}", f.basis, f.matrix), json::form(&f))
        }
        HomologyCmd::ChangeOfBasis => {
            let b = basis_change();
            let mut json = json::int_matrix(&b, None);
            json["from"] = json!(Basis::VanishingCycle.tag());
            json["to"] = json!(Basis::Alpha.tag());
            out(format!("columns: vanishing cycles in the alpha basis\n{b}"), json)
        }
    }
}

fn parse_ints(s: &str) -> Result<Vec<i64>> {
    parse_list(s)?
        .iter()
        .map(|q| {
            if !q.is_integer() {
                return Err(Error::Parse { position: 0, message: format!("expected an integer, found {q}") });
            }
            i64::try_from(q.to_integer())
                .map_err(|_| Error::Parse { position: 0, message: format!("integer {q} is out of range") })
        })
        .collect()
}

fn link(cmd: &LinkCmd) -> Result<Output> {
    match cmd {
        LinkCmd::Monodromy { euler } => {
            let e = parse_ints(euler)?;
            let a = link_monodromy(&e)?;
            let h = link_h1_from_euler(&e)?;
            let mut json = json::int_matrix(&a, None);
            json["euler"] = json!(e);
            json["h1"] = json::abelian_group(&h);
            out(format!("monodromy\n{a}H1 {h}\n"), json)
        }
        LinkCmd::H1 { basis, euler } => {
            let (h, source) = match euler {
                Some(e) => (link_h1_from_euler(&parse_ints(e)?)?, json!({ "euler": parse_ints(e)? })),
                None => {
                    let b = Basis::parse(basis.as_deref().unwrap_or("vc"))?;
                    (link_h1(&intersection_form(b).matrix), json!({ "basis": b.tag() }))
                }
            };
            let mut json = json::abelian_group(&h);
            json["source"] = source;
            out(format!("H1 {h}\n"), json)
        }
    }
}

fn lines(t: &str, gram: bool) -> Result<Output> {
    let t = parse_rational(t)?;
    let ls = lines_on_fiber(&t)?;
    let mut text = format!("{} lines on the fiber at t = {t}\n", ls.len());
    for l in &ls {
        writeln!(text, "  {l}").unwrap();
    }
    let mut json = json!({ "t": json::rational(&t), "lines": ls.iter().map(json::line).collect::<Vec<_>>() });
    if gram {
        let g = class_gram(&t)?;
        write!(text, "gram\n{g}").unwrap();
        json["gram"] = json::int_matrix(&g, Some(Basis::VanishingCycle.tag()));
    }
    out(text, json)
}

fn traces(boundary: &str) -> Result<Output> {
    let v = parse_list(boundary)?;
    let t: [fricke::Rational; 4] = v.try_into().map_err(|v: Vec<_>| Error::Parse {
        position: 0,
        message: format!("expected four boundary traces, found {}", v.len()),
    })?;
    let (p, s) = traces_to_params(&t);
    out(
        format!("traces {}\nP {}\nQ {}\nR {}\nS {s}\n", point_text(&t), p.p, p.q, p.r),
        json!({ "traces": json::rationals(&t), "params": json::params(&p), "s": json::rational(&s) }),
    )
}

fn witness(cmd: &WitnessCmd) -> Result<Output> {
    match cmd {
        WitnessCmd::Torus { a, b } => {
            let c = torus_character(&Sl2::parse(a)?, &Sl2::parse(b)?);
            out(
                format!(
                    "point            {}\nkappa            {}\ntrace commutator {}\n",
                    point_text(&c.point),
                    c.kappa,
                    c.commutator_trace
                ),
                json::torus(&c),
            )
        }
        WitnessCmd::Sphere { d1, d2, d3 } => {
            let c = sphere_character(&Sl2::parse(d1)?, &Sl2::parse(d2)?, &Sl2::parse(d3)?);
            out(
                format!(
                    "traces     {}\npoint      {}\nparams     {}\nS          {}\nkappa      {}\non surface {}\n",
                    point_text(&c.traces),
                    point_text(&c.point),
                    c.params,
                    c.s,
                    c.kappa,
                    if c.on_surface { "yes" } else { "no" }
                ),
                json::sphere(&c),
            )
        }
    }
}

fn parse_int_matrix(s: &str) -> Result<IntMatrix> {
    let rows: Vec<Vec<Integer>> = s
        .split(';')
        .map(|r| Ok(parse_ints(r)?.into_iter().map(Integer::from).collect()))
        .collect::<Result<_>>()?;
    if rows.iter().any(|r| r.len() != rows[0].len()) {
        return Err(Error::Parse { position: 0, message: "matrix rows have different lengths".into() });
    }
    IntMatrix::from_rows(rows)
}

fn snf(matrix: &str) -> Result<Output> {
    let a = parse_int_matrix(matrix)?;
    let s = smith_normal_form(&a);
    let g = s.cokernel();
    let diag: Vec<String> = s.diagonal().iter().filter(|d| **d != Integer::from(0)).map(ToString::to_string).collect();
    let json = json!({
        "d": json::int_rows(&s.d),
        "u": json::int_rows(&s.u),
        "v": json::int_rows(&s.v),
        "invariant_factors": diag,
        "cokernel": json::abelian_group(&g),
    });
    out(format!("invariant factors {}\ncokernel {g}\nD\n{}U\n{}V\n{}", diag.join(" "), s.d, s.u, s.v), json)
}
