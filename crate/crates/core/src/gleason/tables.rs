//! Product forms of `alpha_{2m+1,0}` and `alpha_{2m,0}` for each residue
//! family. They are cross-checks for the binomial sums, never the primary
//! evaluation path: their denominators vanish for small `m`.


use crate::arith::{self, binom_or_zero, Integer, Rational};

fn product_form(numer: i128, denom_factors: &[i64], top: i64, bottom: i64) -> Option<Rational> {
    let denom: i128 = denom_factors.iter().map(|&f| f as i128).product();
    if denom == 0 {
        return None;
    }
    let c = binom_or_zero(top, bottom);
    Some(
        Rational::new(Integer::from(numer), Integer::from(denom)) * arith::from_integer(c),
    )
}

/// Product form of `alpha_{2m+1,0}` for `n = 24m + 2t`, `1 <= t <= 11`.
/// `None` when the family is not tabulated or the denominator vanishes.
pub fn alpha_2m1_product(t: usize, m: usize) -> Option<Rational> {
    let m = m as i64;
    let mi = m as i128;
    let neg = |v: Option<Rational>| v.map(|x| -x);
    match t {
        1 => neg(product_form((12 * mi + 1) * (56 * mi + 4), &[2 * m + 1, m - 1], 5 * m - 1, m - 2)),
        2 => neg(product_form(2 * (6 * mi + 1) * (8 * mi + 1), &[m, 2 * m + 1], 5 * m, m - 1)),
        3 => neg(product_form(3 * (4 * mi + 1) * (6 * mi + 1), &[m, 2 * m + 1], 5 * m, m - 1)),
        4 => neg(product_form(4 * (3 * mi + 1), &[2 * m + 1], 5 * m + 1, m)),
        5 => neg(product_form(12 * mi + 5, &[2 * m + 1], 5 * m + 1, m)),
        6 => neg(product_form(6, &[], 5 * m + 2, m)),
        7 => neg(product_form(3 * (12 * mi + 7), &[m], 5 * m + 2, m - 1)),
        8 => neg(product_form(16 * (3 * mi + 2), &[m], 5 * m + 3, m - 1)),
        9 => neg(product_form(12 * (7 * mi + 5) * (4 * mi + 3), &[m, m - 1], 5 * m + 3, m - 2)),
        10 => neg(product_form(20 * (6 * mi + 5) * (4 * mi + 3), &[m, m - 1], 5 * m + 4, m - 2)),
        11 => neg(product_form(
            6 * (12 * mi + 11) * (6 * mi + 5) * (8 * mi + 7),
            &[m, m - 1, m - 2],
            5 * m + 4,
            m - 3,
        )),
        _ => None,
    }
}

/// Product form of `alpha_{2m,0}` for `t` in `{4, 6, 7, 8, 9, 10}`.
pub fn alpha_2m_product(t: usize, m: usize) -> Option<Rational> {
    let m = m as i64;
    let mi = m as i128;
    let fall = |len: i64| -> Vec<i64> { (0..len).map(|s| m - s).collect() };
    match t {
        4 => product_form(8 * (4 * mi + 1) * (11 * mi + 3) * (3 * mi + 1), &fall(3), 5 * m + 1, m - 3),
        6 => product_form(
            24 * (116 * mi * mi + 79 * mi + 15) * (2 * mi + 1) * (2 * mi + 1),
            &fall(4),
            5 * m + 2,
            m - 4,
        ),
        7 => product_form(
            24 * (2 * mi + 1) * (12 * mi + 7) * (28 * mi * mi + 22 * mi + 5),
            &fall(4),
            5 * m + 3,
            m - 4,
        ),
        8 => product_form(
            16 * (3 * mi + 2) * (2 * mi + 1) * (1216 * mi * mi * mi + 1956 * mi * mi + 1073 * mi + 210),
            &fall(5),
            5 * m + 3,
            m - 5,
        ),
        9 => product_form(
            120 * (2 * mi + 1) * (4 * mi + 3) * (176 * mi * mi * mi + 308 * mi * mi + 189 * mi + 42),
            &fall(5),
            5 * m + 4,
            m - 5,
        ),
        10 => product_form(
            16 * (6 * mi + 5)
                * (2 * mi + 1)
                * (4 * mi + 3)
                * (1592 * mi * mi * mi + 3280 * mi * mi + 2363 * mi + 630),
            &fall(6),
            5 * m + 4,
            m - 6,
        ),
        _ => None,
    }
}

/// Families with a tabulated `alpha_{2m,0}` product form.
pub const ALPHA_2M_FAMILIES: [usize; 6] = [4, 6, 7, 8, 9, 10];

/// True when the product form is defined at `m` and differs from `sum`.
pub fn disagrees(product: Option<Rational>, sum: &Rational) -> bool {
    matches!(product, Some(v) if &v != sum)
}
