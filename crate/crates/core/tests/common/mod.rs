//! Independent free-group arithmetic on strings over `a, A, b, B`, used as an oracle.
#![allow(dead_code)]

pub fn inv_letter(c: char) -> char {
    if c.is_ascii_lowercase() {
        c.to_ascii_uppercase()
    } else {
        c.to_ascii_lowercase()
    }
}

/// Free reduction of a string of letters.
pub fn reduce(w: &str) -> String {
    let mut out: Vec<char> = Vec::new();
    for c in w.chars() {
        if out.last() == Some(&inv_letter(c)) {
            out.pop();
        } else {
            out.push(c);
        }
    }
    out.into_iter().collect()
}

pub fn inverse(w: &str) -> String {
    w.chars().rev().map(inv_letter).collect()
}

pub fn mul(u: &str, v: &str) -> String {
    reduce(&format!("{u}{v}"))
}

pub fn len(w: &str) -> u32 {
    reduce(w).chars().count() as u32
}

pub fn dist(u: &str, v: &str) -> u32 {
    len(&mul(&inverse(u), v))
}

/// Twice the Gromov product `(x|y)_z`, an integer.
pub fn gromov2(x: &str, y: &str, z: &str) -> i64 {
    dist(x, z) as i64 + dist(y, z) as i64 - dist(x, y) as i64
}

/// Reduced words of length at most `r` in shortlex order over `a < A < b < B`.
pub fn ball(r: u32) -> Vec<String> {
    let mut out = vec![String::new()];
    let mut layer = vec![String::new()];
    for _ in 0..r {
        let mut next = Vec::new();
        for w in &layer {
            for c in ['a', 'A', 'b', 'B'] {
                if !w.ends_with(inv_letter(c)) {
                    next.push(format!("{w}{c}"));
                }
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Expands `x^k` into letters; `x` is a single letter.
pub fn power(x: char, k: i64) -> String {
    let c = if k < 0 { inv_letter(x) } else { x };
    std::iter::repeat_n(c, k.unsigned_abs() as usize).collect()
}

/// The library writes `e` for the identity.
pub fn label(w: &str) -> String {
    if w.is_empty() {
        "e".into()
    } else {
        w.to_string()
    }
}

/// Busemann function of the ray `p·u^∞`, from its definition as `lim d(x, p u^n) − d(o, p u^n)`.
pub fn busemann(p: &str, u: &str, x: &str) -> i64 {
    let term = |n: usize| mul(p, &u.repeat(n));
    let far = 4 * (len(x) as usize + len(p) as usize + 4);
    dist(x, &term(far)) as i64 - len(&term(far)) as i64
}

/// Expands the library's `a^3B^2` notation into letters.
pub fn expand(label: &str) -> String {
    if label == "e" {
        return String::new();
    }
    let cs: Vec<char> = label.chars().collect();
    let mut out = String::new();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        i += 1;
        let mut k = 1;
        if i < cs.len() && cs[i] == '^' {
            let start = i + 1;
            i = start;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            k = cs[start..i].iter().collect::<String>().parse::<i64>().expect("exponent");
        }
        out.push_str(&power(c, k));
    }
    out
}

/// Rewrites `aaab` as the library's `a^3b`.
pub fn compress(w: &str) -> String {
    let cs: Vec<char> = w.chars().collect();
    let mut out = String::new();
    let mut i = 0;
    while i < cs.len() {
        let mut j = i;
        while j < cs.len() && cs[j] == cs[i] {
            j += 1;
        }
        out.push(cs[i]);
        if j - i > 1 {
            out.push_str(&format!("^{}", j - i));
        }
        i = j;
    }
    label(&out)
}
