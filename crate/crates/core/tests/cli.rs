use lincoh::calculus_il::{check_derivation_il, DerivationIL};
use lincoh::cli::run;
use lincoh::gen::random_derivation_il;
use lincoh::syntax::Letter;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn lincoh(args: &[&str], stdin: &str) -> Run {
    let mut argv = vec!["lincoh"];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
    Run { code, out: String::from_utf8(out).unwrap(), err: String::from_utf8(err).unwrap() }
}

const F: &str =
    "imp[p]((eps[p, q] * 1[p]) o (1[p] * sym[p, p -o q]) o (sym[p, p] * 1[p -o q])) o eta[p, p * (p -o q)]";
const G: &str = "imp[p](eps[p, q] * 1[p]) o eta[p, (p -o q) * p] o sym[p, p -o q]";

#[test]
fn eq_exit_codes() {
    let r = lincoh(&["eq", "sym[I, p]", "1[p]"], "");
    assert_eq!((r.code, r.out.trim()), (0, "Equal"));
    assert_eq!(lincoh(&["eq", F, G], "").code, 1);
    assert_eq!(lincoh(&["eq", "1[p]", "1[q]"], "").code, 2);
    assert_eq!(lincoh(&["eq", "eps[p, I]", "eps[p, I]"], "").code, 3);
}

#[test]
fn eq_with_oracle() {
    let r = lincoh(&["eq", "--oracle", "imp[p](eps[p, q]) o eta[p, p -o q]", "1[p -o q]"], "");
    assert_eq!(r.code, 0);
    assert!(r.out.contains("oracle: Equal"), "{}", r.out);
}

#[test]
fn usage_and_data_errors() {
    assert_eq!(lincoh(&["frobnicate"], "").code, 64);
    assert_eq!(lincoh(&["eq", "1[p]"], "").code, 64);
    let r = lincoh(&["parse", "p * |- q"], "");
    assert_eq!(r.code, 65);
    assert!(r.err.contains('^'), "{}", r.err);
    assert_eq!(lincoh(&["check", "sym[p, q] o sym[p, q]"], "").code, 65);
    assert_eq!(lincoh(&["elim", "/nonexistent/derivation.txt"], "").code, 66);
}

#[test]
fn parse_and_check() {
    assert_eq!(lincoh(&["parse", "(p * I) -o q"], "").out.trim(), "p -o q");
    assert_eq!(lincoh(&["check", "eps[p, q]"], "").out.trim(), "p * (p -o q) |- q");
}

#[test]
fn derive() {
    let r = lincoh(&["derive", "(p -o I) -o I |- p"], "");
    assert_eq!((r.code, r.out.trim()), (1, "not derivable"));
    let r = lincoh(&["derive", "p, p -o q |- q"], "");
    assert_eq!(r.code, 0);
    let r = lincoh(&["check", "--derivation", "-"], &r.out);
    assert_eq!((r.code, r.out.trim()), (0, "p, p -o q |- q"));
    let r = lincoh(&["derive", "--system", "il", "p * (q -o r) |- q -o (r * p)"], "");
    assert_eq!(r.code, 0);
}

#[test]
fn elim_clean_code_pipeline() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let letters = [Letter::new("p"), Letter::new("q")];
    let d = random_derivation_il(&mut rng, &letters, 2, 4);
    let conclusion = check_derivation_il(&d).unwrap();

    let r = lincoh(&["elim", "-"], &d.to_text());
    assert_eq!(r.code, 0, "{}", r.err);
    assert!(!r.out.contains("cut"));
    let e = DerivationIL::from_text(&r.out).unwrap();
    assert!(e.is_cut_free());
    assert_eq!(check_derivation_il(&e).unwrap(), conclusion);

    let r = lincoh(&["clean", "-"], &r.out);
    assert_eq!(r.code, 0, "{}", r.err);
    assert_eq!(lincoh(&["clean", "-"], &d.to_text()).code, 65);

    let r = lincoh(&["code", "-"], &r.out);
    assert_eq!(r.code, 0);
    assert_eq!(lincoh(&["check", r.out.trim()], "").out.trim(), conclusion.to_string());
}

#[test]
fn decode_then_code() {
    let r = lincoh(&["decode", G], "");
    assert_eq!(r.code, 0);
    let r = lincoh(&["code", "-"], &r.out);
    let links = |t: &str| lincoh(&["links", t], "").out;
    assert_eq!(links(r.out.trim()), links(G));
}

#[test]
fn links_render_generalize() {
    let json = lincoh(&["links", G], "").out;
    assert!(json.contains("\"loops\":0"));
    for fmt in ["dot", "tikz", "json"] {
        let r = lincoh(&["render", "-", "--format", fmt], &json);
        assert_eq!(r.code, 0, "{fmt}: {}", r.err);
    }
    assert_eq!(lincoh(&["render", "-", "--format", "json"], &json).out, json);
    let r = lincoh(&["generalize", G], "");
    assert!(r.out.contains("a * (b -o c) |- b -o c * a"), "{}", r.out);
}

#[test]
fn fuzz_is_deterministic() {
    let a = lincoh(&["fuzz", "--seed", "5", "--count", "20", "--budget", "2000"], "");
    let b = lincoh(&["fuzz", "--seed", "5", "--count", "20", "--budget", "2000"], "");
    assert_eq!(a.code, 0, "{}", a.out);
    assert_eq!(a.out, b.out);
}
