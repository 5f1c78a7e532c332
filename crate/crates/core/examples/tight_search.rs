//! Arrays `(k, c2, c3)` whose sets meet a flat bound.
//!
//! `cargo run --example tight_search -- 200`

use flatsets::optimality::search_tight;

fn main() {
    let max_k = std::env::args().nth(1).map_or(60, |a| a.parse().expect("max k"));
    for r in search_tight(max_k) {
        let field = match (r.real_tight, r.complex_tight) {
            (true, true) => "both",
            (true, false) => "real",
            _ => "complex",
        };
        let verdict = r.real_verdict.as_ref().or(r.complex_verdict.as_ref());
        println!("({}, {}, {}) n={} {field}: {verdict:?}", r.k, r.c2, r.c3, r.n);
    }
}
