use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use hkrr_core::algebra::{binom_poly, format_rational, int, parse_rational, rat, Rational};
use hkrr_core::rr::{
    count_perfect_matchings, fujiki_polarized, h0_theta_fiber, og10_polynomial_from_shift,
    og6_table, solve_og10_shift, solve_og6_coefficients,
};
use hkrr_core::solver::{
    assemble_hodge_equations, assemble_rr_equations, chi_p_values, euler_characteristic_check,
    nieper_rhs, og10_unknowns, ortiz_lhs, published_chern_numbers, OG10_CHI_P,
    PUBLISHED_CHERN_NUMBERS,
};
use hkrr_core::{BBGram, ChernNumbers, FamilyKind, HKFamily, UniPoly};
use serde::Deserialize;
use serde_json::{json, Map, Value};

use crate::report::{poly_value, rational_list, Check, Report};
use crate::{input_err, CliError};

fn family(name: &str, n: Option<usize>) -> Result<HKFamily, CliError> {
    let kind = FamilyKind::from_str(name).map_err(input_err)?;
    HKFamily::with_default_n(kind, n).map_err(input_err)
}

fn parse_q(s: &str) -> Result<Rational, CliError> {
    parse_rational(s).map_err(input_err)
}

/// RR polynomial of a family, its `a_i` constants, and optionally `χ(L)` at
/// `q(L) = eval`.
pub fn cmd_rr(name: &str, n: Option<usize>, eval: Option<&str>) -> Result<Report, CliError> {
    let fam = family(name, n)?;
    let eval = eval.map(parse_q).transpose()?;
    let mut r = Report::new("rr");
    r.input("family", fam.to_string()).input("n", fam.n());
    if let Some(q) = &eval {
        r.input("eval", format_rational(q));
    }
    let poly = fam.rr_polynomial();
    r.result("polynomial", poly_value(&poly))
        .result("a", rational_list(&fam.huybrechts_constants()))
        .rational("c_X", &fam.fujiki_constant());
    if let Some(q) = &eval {
        r.rational("chi", &fam.chi_line_bundle(q));
    }
    let n1 = int(fam.n() as i64 + 1);
    r.check(Check::rational(
        "a_0 = chi(O_X)",
        &n1,
        &fam.huybrechts_constants()[0],
        "chi(O_X) = n + 1",
    ));
    r.check(Check::rational(
        "a_n = c_X",
        &fam.fujiki_constant(),
        &fam.huybrechts_constants()[fam.n()],
        "leading RR coefficient is the Fujiki constant",
    ));
    Ok(r)
}

/// `χ(L)` for a line bundle with `q(L) = q`.
pub fn cmd_chi(name: &str, n: Option<usize>, q: &str) -> Result<Report, CliError> {
    let fam = family(name, n)?;
    let q = parse_q(q)?;
    let mut r = Report::new("chi");
    r.input("family", fam.to_string())
        .input("n", fam.n())
        .input("q", format_rational(&q));
    r.rational("chi", &fam.chi_line_bundle(&q));
    Ok(r)
}

#[derive(Deserialize)]
struct GramFile {
    labels: Vec<String>,
    entries: Vec<Vec<Value>>,
}

fn gram_entry(v: &Value) -> Result<Rational, CliError> {
    match v {
        Value::Number(x) => x
            .as_i64()
            .map(int)
            .ok_or_else(|| CliError::Input(format!("Gram entry {x} is not an integer; use \"p/q\""))),
        Value::String(s) => parse_q(s),
        other => Err(CliError::Input(format!("Gram entry {other} is not a rational"))),
    }
}

/// Parses `{"labels": [...], "entries": [[...]]}`; entries are integers or
/// `"p/q"` strings.
pub fn parse_gram(text: &str) -> Result<BBGram, CliError> {
    let file: GramFile = serde_json::from_str(text).map_err(input_err)?;
    let entries = file
        .entries
        .iter()
        .map(|row| row.iter().map(gram_entry).collect())
        .collect::<Result<_, _>>()?;
    BBGram::new(file.labels, entries).map_err(input_err)
}

pub fn load_gram(path: &Path) -> Result<BBGram, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    parse_gram(&text)
}

/// `∫ α_1 ⋯ α_{2n}` via the polarized Fujiki relation.
pub fn cmd_fujiki(cx: &str, gram: &BBGram, slots: &str) -> Result<Report, CliError> {
    let c = parse_q(cx)?;
    let idx = gram.parse_slots(slots).map_err(input_err)?;
    let value = fujiki_polarized(&c, gram, &idx).map_err(input_err)?;
    let mut r = Report::new("fujiki");
    r.input("c_X", format_rational(&c))
        .input("labels", gram.labels().to_vec())
        .input("slots", slots);
    r.result("slot_count", idx.len()).rational("integral", &value);
    Ok(r)
}

/// Output of `chern og10`.
#[derive(Debug, Clone)]
pub struct ChernReport {
    pub numbers: ChernNumbers,
    pub rr_rank: usize,
    pub combined_rank: usize,
    pub checks: Vec<Check>,
}

impl ChernReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> Value {
        let mut nums = Map::new();
        for m in og10_unknowns() {
            let v = self.numbers.get(&m).expect("complete assignment");
            nums.insert(m.to_string(), Value::String(format_rational(v)));
        }
        json!({
            "family": "OG10",
            "chern_numbers": nums,
            "checks": self.checks,
        })
    }

    pub fn to_table(&self) -> String {
        let mut out = String::from("OG10 Chern numbers\n");
        for m in og10_unknowns() {
            let v = self.numbers.get(&m).expect("complete assignment");
            writeln!(out, "  {:<10} {}", m.to_string(), format_rational(v)).unwrap();
        }
        writeln!(out, "rr-equations rank: {}", self.rr_rank).unwrap();
        writeln!(out, "combined rank: {}", self.combined_rank).unwrap();
        for c in &self.checks {
            writeln!(
                out,
                "  [{}] {}: {} = {}  ({})",
                if c.pass { "PASS" } else { "FAIL" },
                c.name,
                c.actual,
                c.expected,
                c.source
            )
            .unwrap();
        }
        out
    }
}

/// Solves the OG10 system and checks the solution against every row and the
/// published values.
pub fn cmd_chern() -> Result<ChernReport, CliError> {
    let rr = assemble_rr_equations()?;
    let hodge = assemble_hodge_equations(true)?;
    let solve_rows = rr.combine(&assemble_hodge_equations(false)?)?;
    let numbers = solve_rows.solve()?;
    let all = rr.combine(&hodge)?;

    let mut checks = vec![
        Check::new("rr-equations rank", "3", rr.rank().to_string(), "six RR coefficient rows"),
        Check::new(
            "combined rank",
            "7",
            all.rank().to_string(),
            "RR rows with chi^0..chi^4",
        ),
    ];
    for (name, res) in all.residuals(&numbers)? {
        checks.push(Check::rational(&name, &int(0), &res, "residual of the row"));
    }
    let euler = euler_characteristic_check(&numbers)?;
    let c10 = numbers.get(&"c10".parse().expect("valid monomial")).expect("c10").clone();
    checks.push(Check::rational(
        "Euler characteristic",
        &c10,
        &euler,
        "sum (-1)^p chi^p = c10",
    ));
    for (m, want) in og10_unknowns().iter().zip(PUBLISHED_CHERN_NUMBERS) {
        checks.push(Check::rational(
            &m.to_string(),
            &int(want),
            numbers.get(m).expect("complete assignment"),
            "published Chern number",
        ));
    }
    Ok(ChernReport {
        rr_rank: rr.rank(),
        combined_rank: all.rank(),
        numbers,
        checks,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Og6,
    Og10,
    Identity,
    Fujiki,
    All,
}

impl FromStr for Suite {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "og6" => Ok(Suite::Og6),
            "og10" => Ok(Suite::Og10),
            "identity" => Ok(Suite::Identity),
            "fujiki" => Ok(Suite::Fujiki),
            "all" => Ok(Suite::All),
            _ => Err(CliError::Input(format!("unknown suite {s:?}"))),
        }
    }
}

fn fail(r: &mut Report, name: &str, e: hkrr_core::Error, source: &str) {
    r.check(Check::new(name, "ok", format!("error: {e}"), source));
}

fn verify_og10(r: &mut Report) {
    let shift = match solve_og10_shift() {
        Ok(s) => s,
        Err(e) => return fail(r, "og10 shift", e, "binom(s + 5, 5) = 6"),
    };
    r.rational("og10.shift", &shift);
    r.check(Check::rational("og10 shift (k - q(Theta))/2", &int(1), &shift, "binom(s + 5, 5) = 6"));
    let poly = og10_polynomial_from_shift(&shift);
    r.result("og10.polynomial", poly_value(&poly));
    let k3 = HKFamily::k3n(5).expect("n = 5 is valid").rr_polynomial();
    r.check(Check::new(
        "og10 polynomial = K3^[5]",
        k3.to_string(),
        poly.to_string(),
        "binom(t/2 + shift + 5, 5)",
    ));
    match h0_theta_fiber(1, &int(0)) {
        Ok(v) => {
            r.check(Check::rational(
                "og10 h^0(Theta + F), q(Theta) = 0",
                &int(21),
                &v,
                "binom(m + 6, 5) at m = 1",
            ));
        }
        Err(e) => fail(r, "og10 h^0(Theta + F)", e, "binom(m + 6, 5)"),
    }
}

fn verify_og6(r: &mut Report) {
    let table = og6_table();
    let (a1, a2) = match solve_og6_coefficients(&table) {
        Ok(v) => v,
        Err(e) => return fail(r, "og6 coefficients", e, "divisor table (chi, q)"),
    };
    r.result("og6.a", rational_list(&[int(4), a1.clone(), a2.clone(), int(60)]));
    r.check(Check::rational("og6 a_1", &rat(22, 3), &a1, "solve from divisor table"));
    r.check(Check::rational("og6 a_2", &int(24), &a2, "solve from divisor table"));
    let poly = UniPoly::new(vec![int(4), &a1 / int(2), &a2 / int(24), int(60) / int(720)]);
    let kum = HKFamily::kumn(3).expect("n = 3 is valid").rr_polynomial();
    r.check(Check::new(
        "og6 polynomial = Kum_3",
        kum.to_string(),
        poly.to_string(),
        "4 binom(t/2 + 3, 3)",
    ));
    for d in &table {
        r.check(Check::rational(
            &format!("og6 chi({}) at q = {}", d.name, format_rational(&d.q)),
            &d.chi,
            &poly.eval(&d.q),
            "divisor table entry",
        ));
    }
}

fn verify_identity(r: &mut Report) {
    let run = |r: &mut Report| -> hkrr_core::Result<()> {
        let nums = published_chern_numbers();
        let rhs = nieper_rhs().evaluate(&nums)?;
        let lhs = ortiz_lhs();
        r.result("identity.lhs", poly_value(&lhs));
        r.check(Check::new(
            "binom(8y^2 - 2, 5) = RR integral at published numbers",
            lhs.to_string(),
            rhs.to_string(),
            "RR polynomial in y equals the integral of exp(-2 sum b_2k s_2k T_2k(y))",
        ));
        let rr = assemble_rr_equations()?;
        r.check(Check::new("rr-equations rank", "3", rr.rank().to_string(), "six RR coefficient rows"));
        let chi = chi_p_values(&nums)?;
        for (p, want) in OG10_CHI_P.iter().enumerate() {
            r.check(Check::rational(
                &format!("chi^{p} at published numbers"),
                &int(*want),
                &chi[p],
                "integral of ch(Lambda^p Omega) td",
            ));
        }
        let euler = euler_characteristic_check(&nums)?;
        r.check(Check::rational(
            "sum (-1)^p chi^p = c10",
            &int(PUBLISHED_CHERN_NUMBERS[6]),
            &euler,
            "Euler characteristic",
        ));
        let lead = lhs.leading() * binom_poly(&int(1), &int(0), 5).leading().recip();
        r.check(Check::rational("leading coefficient of lhs / (1/5!)", &int(32768), &lead, "8^5"));
        Ok(())
    };
    if let Err(e) = run(r) {
        fail(r, "identity", e, "RR identity");
    }
}

fn verify_fujiki(r: &mut Report) {
    let og10 = HKFamily::og10();
    r.check(Check::rational("c_X(OG10)", &int(945), &og10.fujiki_constant(), "9!!"));
    r.check(Check::rational("c_X(OG6)", &int(60), &HKFamily::og6().fujiki_constant(), "4 * 15"));
    r.check(Check::new(
        "perfect matchings on 10 slots",
        "945",
        count_perfect_matchings(10).to_string(),
        "9!!",
    ));
    let gram = BBGram::new(
        vec!["F".into(), "Theta".into()],
        vec![vec![int(0), int(1)], vec![int(1), int(0)]],
    )
    .expect("valid Gram");
    let slots = gram.parse_slots("Theta^5*F^5").expect("valid slots");
    match fujiki_polarized(&og10.fujiki_constant(), &gram, &slots) {
        Ok(v) => {
            r.rational("fujiki.theta5_f5", &v);
            r.check(Check::rational("Theta^5 F^5 = 5!", &int(120), &v, "polarized Fujiki relation"));
        }
        Err(e) => fail(r, "Theta^5 F^5", e, "polarized Fujiki relation"),
    }
}

/// Runs the named verification suite. Failures appear as failing checks.
pub fn cmd_verify(suite: Suite) -> Report {
    let mut r = Report::new("verify");
    let name = match suite {
        Suite::Og6 => "og6",
        Suite::Og10 => "og10",
        Suite::Identity => "identity",
        Suite::Fujiki => "fujiki",
        Suite::All => "all",
    };
    r.input("suite", name);
    if matches!(suite, Suite::Og10 | Suite::All) {
        verify_og10(&mut r);
    }
    if matches!(suite, Suite::Og6 | Suite::All) {
        verify_og6(&mut r);
    }
    if matches!(suite, Suite::Identity | Suite::All) {
        verify_identity(&mut r);
    }
    if matches!(suite, Suite::Fujiki | Suite::All) {
        verify_fujiki(&mut r);
    }
    r
}
