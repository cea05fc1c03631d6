//! The built-in invariant suite, as run by `hoalg selftest`.
//!
//! ```bash
//! cargo run -p hoalg --example selftest -- 5
//! ```

use hoalg::selftest::run_selftest;

fn main() {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    let report = run_selftest(seed);
    print!("{}", report.render_text());
    std::process::exit(report.exit_code());
}
