//! Exit criteria. Each criterion prints one PASS/FAIL line; the test fails
//! if any criterion fails. All comparisons are exact.

use std::process::Command;
use std::time::{Duration, Instant};

use powersumkit::cli::{parse_csv, parse_json, verify_outcome, Family, EXIT_FAILURE, EXIT_OK, EXIT_USAGE};
use powersumkit::combinatorics::{bernoulli_number, legendre_stirling_first, legendre_stirling_second};
use powersumkit::exact::{rat, rat_int, sign, Integer, Rational};
use powersumkit::powersums::{
    direct_sum, ones_identity_residual, s_binomial_recurrence, s_brute, s_even_powers,
    s_lang_original, s_lang_refined, s_newton_recurrence, s_odd_even_powers,
    s_odd_even_powers_poly, s_range, triangular_sum_binomial, triangular_sum_ls, PowerSumQuery,
    Target,
};
use powersumkit::symfuncs::{elementary_prefix, orthogonality_residual, pn_polynomial_coeffs, SequenceSpec};
use powersumkit::verify::{
    classical_zeta_coeff, run, Bounds, Failure, Suite, VerifyReport, LS_FIRST_TABLE, LS_SECOND_TABLE,
};
use powersumkit::zeta::{bernoulli_binomial_identity, bernoulli_even_recursion, merca_ls_bernoulli_identity, zeta_even_exact};

const LS_TABLES_BUDGET: Duration = Duration::from_millis(100);
const CONCORDANCE_BUDGET: Duration = Duration::from_secs(5);
const VERIFY_ALL_BUDGET: Duration = Duration::from_secs(30);

type Outcome = Result<String, String>;

fn check(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn brute(k: u32, n: u32) -> Integer {
    if n == 0 {
        return Integer::from(0);
    }
    s_brute(&PowerSumQuery::prefix(k, n).unwrap())
}

fn criterion_1_ls_tables() -> Outcome {
    let start = Instant::now();
    let mut cells = 0;
    for (n, (first, second)) in LS_FIRST_TABLE.iter().zip(LS_SECOND_TABLE.iter()).enumerate() {
        for j in 0..=n {
            let n = n as u32;
            let got1 = legendre_stirling_first(n, j as i64).map_err(|e| e.to_string())?;
            let got2 = legendre_stirling_second(n, j as i64).map_err(|e| e.to_string())?;
            check(got1 == Integer::from(first[j]), || format!("Ps_{n}^({j}) = {got1}, table {}", first[j]))?;
            check(got2 == Integer::from(second[j]), || format!("PS_{n}^({j}) = {got2}, table {}", second[j]))?;
            cells += 2;
        }
    }
    let report = &run(Suite::LsTables, Bounds::default())[0];
    let elapsed = start.elapsed();
    check(report.passed(), || format!("verify ls_tables failures: {:?}", report.failures))?;
    check(cells == 72 && report.cells == 72, || format!("{cells} cells checked"))?;
    check(elapsed < LS_TABLES_BUDGET, || format!("took {elapsed:?}"))?;
    Ok(format!("{cells} cells exact, {elapsed:?}"))
}

fn criterion_2_concordance() -> Outcome {
    let start = Instant::now();
    let mut cells = 0;
    for k in 1..=12 {
        for n in 1..=25 {
            let expected = brute(k, n);
            let methods = [
                ("LangOriginal", s_lang_original(k, n)),
                ("LangRefined", s_lang_refined(k, n)),
                ("NewtonRecurrence", s_newton_recurrence(k, n)),
                ("BinomialRecurrence", s_binomial_recurrence(k, n)),
            ];
            for (name, got) in methods {
                let got = got.map_err(|e| e.to_string())?;
                check(got == expected, || format!("{name} k={k} n={n}: {got} != {expected}"))?;
            }
            cells += 1;
        }
    }
    for n in 1..=25 {
        let orig = s_lang_original(0, n).map_err(|e| e.to_string())?;
        let refined = s_lang_refined(0, n).map_err(|e| e.to_string())?;
        check(orig == Integer::from(n) && refined == Integer::from(n), || format!("k=0 n={n}: {orig}, {refined}"))?;
        check(brute(0, n) == Integer::from(n), || format!("brute k=0 n={n}"))?;
    }
    let elapsed = start.elapsed();
    check(elapsed < CONCORDANCE_BUDGET, || format!("took {elapsed:?}"))?;
    Ok(format!("{cells} cells x 5 methods + k=0, {elapsed:?}"))
}

fn criterion_3_orthogonality() -> Outcome {
    let families: [fn(u32) -> SequenceSpec; 4] = [
        SequenceSpec::naturals,
        SequenceSpec::Squares,
        SequenceSpec::OddSquares,
        SequenceSpec::DoubledTriangulars,
    ];
    let mut cells = 0;
    for make in families {
        for n in 0..=12 {
            let xs = make(n);
            for k in 0..=15usize {
                let delta = if k == 0 { rat(1, 1) } else { rat(0, 1) };
                let got = orthogonality_residual(&xs, k);
                check(got == delta, || format!("{xs:?} k={k}: residual {got}"))?;
                cells += 1;
            }
        }
    }
    Ok(format!("{cells} residuals equal delta"))
}

fn criterion_4_specializations() -> Outcome {
    let e = |x: powersumkit::Error| x.to_string();
    for k in 1..=15 {
        for n in 1..=15 {
            let r = ones_identity_residual(k, n).map_err(e)?;
            check(r == Integer::from(0), || format!("ones k={k} n={n}: {r}"))?;
        }
    }
    for k in 1..=8 {
        for n in 1..=10 {
            check(s_range(k, n, 1).map_err(e)? == s_lang_refined(k, n).map_err(e)?, || format!("r=1 k={k} n={n}"))?;
            for r in 1..=n {
                let got = s_range(k, n, r).map_err(e)?;
                let expected = brute(k, n) - brute(k, r - 1);
                check(got == expected, || format!("range k={k} n={n} r={r}: {got} != {expected}"))?;
            }
        }
    }
    for k in 1..=6 {
        for n in 1..=15 {
            let got = s_even_powers(k, n).map_err(e)?;
            check(got == brute(2 * k, n), || format!("even k={k} n={n}: {got}"))?;
        }
        for n in 1..=12 {
            let direct: Integer = (1..=n).map(|i| num_traits::Pow::pow(Integer::from(2 * i - 1), 2 * k)).sum();
            let central = s_odd_even_powers(k, n).map_err(e)?;
            let poly = s_odd_even_powers_poly(k, n).map_err(e)?;
            check(central == direct && poly == direct, || format!("odd k={k} n={n}: {central}, {poly}, {direct}"))?;
        }
        for n in 1..=12 {
            let direct = direct_sum(Target::TriangularPowers, &PowerSumQuery::prefix(k, n).unwrap());
            let by_ls = triangular_sum_ls(k, n).map_err(e)?;
            let by_binomial = triangular_sum_binomial(k, n).map_err(e)?;
            check(by_ls == direct && by_binomial == direct, || format!("triangular k={k} n={n}: {by_ls}, {by_binomial}, {direct}"))?;
        }
    }
    Ok("ones, range, central even/odd, odd polynomial, triangular all exact".into())
}

fn criterion_5_zeta() -> Outcome {
    for (k, expected) in [(1, rat(1, 6)), (2, rat(1, 90)), (3, rat(1, 945))] {
        let z = zeta_even_exact(k).map_err(|e| e.to_string())?;
        check(*z.coeff() == expected && z.value.half_exponent == k, || format!("zeta({}) = {}", 2 * k, z.value))?;
    }
    // independent closed form (-1)^{k+1} B_{2k} 2^{2k-1} / (2k)!
    for k in 1..=15 {
        let z = zeta_even_exact(k).map_err(|e| e.to_string())?;
        let classical = classical_zeta_coeff(k);
        check(*z.coeff() == classical, || format!("k={k}: {} != {classical}", z.coeff()))?;
    }
    Ok("1/6, 1/90, 1/945 and classical form for k <= 15".into())
}

fn criterion_6_bernoulli() -> Outcome {
    let zero = Rational::from_integer(Integer::from(0));
    for k in 1..=25 {
        let r = bernoulli_binomial_identity(k).map_err(|e| e.to_string())?;
        check(r == zero, || format!("binomial identity k={k}: {r}"))?;
    }
    for k in 1..=15 {
        let got = bernoulli_even_recursion(k).map_err(|e| e.to_string())?;
        check(got == bernoulli_number(2 * k), || format!("B_{}: {got}", 2 * k))?;
    }
    for k in 1..=6 {
        for n in 1..=8 {
            let r = merca_ls_bernoulli_identity(k, n).map_err(|e| e.to_string())?;
            check(r == zero, || format!("LS identity k={k} n={n}: {r}"))?;
        }
    }
    Ok("binomial identity k<=25, even recursion k<=15, LS identity k<=6 n<=8".into())
}

fn criterion_7_pn_coefficients() -> Outcome {
    for n in 1..=12u32 {
        let p = pn_polynomial_coeffs(n).map_err(|e| e.to_string())?;
        let sigma = elementary_prefix(&SequenceSpec::naturals(n), n as usize);
        check(p.degree() == Some(n as usize - 1), || format!("P_{n} degree {:?}", p.degree()))?;
        for m in 0..n {
            let expected = rat_int(Integer::from(n - m) * sign(m.into())) * &sigma[m as usize];
            check(p.coeff(m as usize) == expected, || format!("P_{n} x^{m}: {} != {expected}", p.coeff(m as usize)))?;
        }
    }
    Ok("C_{n,m} = n - m for n <= 12".into())
}

fn criterion_8_cli() -> Outcome {
    let exe = env!("CARGO_BIN_EXE_powersumkit");
    let call = |args: &[&str]| {
        Command::new(exe)
            .args(args)
            .env_remove("POWERSUMKIT_ROWS_CAP")
            .output()
            .map_err(|e| e.to_string())
    };
    let text = |o: &std::process::Output| String::from_utf8(o.stdout.clone()).unwrap();

    for family in Family::ALL {
        for rows in 0..=10u32 {
            let rows_s = rows.to_string();
            let json = call(&["table", "--family", family.name(), "--rows", &rows_s, "--format", "json"])?;
            let csv = call(&["table", "--family", family.name(), "--rows", &rows_s, "--format", "csv"])?;
            check(json.status.code() == Some(0) && csv.status.code() == Some(0), || format!("{} rows={rows} exit", family.name()))?;
            let parsed = parse_json(&text(&json)).map_err(|e| e.to_string())?;
            let rendered = serde_json::to_string(&parsed).unwrap() + "\n";
            check(rendered == text(&json), || format!("{} rows={rows}: JSON does not round-trip", family.name()))?;
            let from_csv = parse_csv(family.name(), &text(&csv)).map_err(|e| e.to_string())?;
            check(from_csv == parsed, || format!("{} rows={rows}: CSV and JSON cells differ", family.name()))?;
        }
    }

    let ok = call(&["verify", "--suite", "ls_tables"])?;
    check(ok.status.code() == Some(i32::from(EXIT_OK)), || format!("verify exit {:?}", ok.status.code()))?;
    for args in [
        &["verify", "--suite", "nonexistent"][..],
        &["table", "--family", "ls1", "--rows", "1000"][..],
        &["zeta", "--k", "0"][..],
        &["powersum", "--k", "2", "--n", "3", "--r", "2", "--method", "LangOriginal"][..],
    ] {
        let out = call(args)?;
        check(out.status.code() == Some(i32::from(EXIT_USAGE)), || format!("{args:?} exit {:?}", out.status.code()))?;
    }
    let failing = VerifyReport {
        suite: "synthetic".into(),
        cells: 1,
        failures: vec![Failure { cell: "synthetic/cell".into(), expected: "1".into(), actual: "2".into() }],
        elapsed: Duration::ZERO,
    };
    let outcome = verify_outcome(&[failing]);
    check(outcome.code == EXIT_FAILURE && outcome.stdout.contains("synthetic/cell"), || format!("failure outcome {outcome:?}"))?;

    let start = Instant::now();
    let all = call(&["verify", "--suite", "all"])?;
    let elapsed = start.elapsed();
    check(all.status.code() == Some(0), || format!("verify all exit {:?}:\n{}", all.status.code(), text(&all)))?;
    check(elapsed < VERIFY_ALL_BUDGET, || format!("verify all took {elapsed:?}"))?;
    Ok(format!("round-trips for 9 families x 11 sizes, exit codes 0/1/2, verify all in {elapsed:?}"))
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("1 LS tables reproduced", criterion_1_ls_tables),
        ("2 power-sum formula concordance", criterion_2_concordance),
        ("3 orthogonality", criterion_3_orthogonality),
        ("4 specializations", criterion_4_specializations),
        ("5 even zeta values", criterion_5_zeta),
        ("6 Bernoulli identities", criterion_6_bernoulli),
        ("7 P_n coefficient law", criterion_7_pn_coefficients),
        ("8 CLI contract", criterion_8_cli),
    ];
    let mut failed = Vec::new();
    for (name, criterion) in criteria {
        match criterion() {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(why) => {
                println!("FAIL criterion {name}: {why}");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
