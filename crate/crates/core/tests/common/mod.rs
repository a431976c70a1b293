#![allow(dead_code)]

use structmv::linalg::rel_err;
use structmv::C64;

pub fn assert_rel(got: &[C64], want: &[C64], rtol: f64, ctx: &str) {
    let e = rel_err(got, want);
    assert!(e <= rtol, "{ctx}: relative error {e:e} > {rtol:e}");
}
