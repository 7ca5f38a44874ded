//! Text formats: instance files, the matrix dump format, reformulation
//! bundles, and branch traces. Canonical files round-trip byte-identically;
//! all numbers are exact base-10 (rationals as num/den).

use crate::bnb::TraceLine;
use crate::instance::{Bound, IpInstance, Knapsack, Provenance, UBound};
use crate::lattice::ReductionMethod;
use crate::mat::{IntMat, IntVec, Rat};
use num_bigint::BigInt;
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Bad { line: usize, msg: String },
    #[error("unexpected end of file while reading {0}")]
    Eof(String),
    #[error("unknown header `{0}`")]
    UnknownHeader(String),
}

fn bad(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Bad {
        line,
        msg: msg.into(),
    }
}

// ---------------------------------------------------------------------------
// scalars

fn write_bound(b: &Bound) -> String {
    match b {
        Bound::NegInf => "-inf".into(),
        Bound::PosInf => "inf".into(),
        Bound::Finite(r) => r.to_string(),
    }
}

fn parse_bound(s: &str, line: usize) -> Result<Bound, ParseError> {
    match s {
        "inf" | "+inf" => Ok(Bound::PosInf),
        "-inf" => Ok(Bound::NegInf),
        _ => Ok(Bound::Finite(parse_rat(s, line)?)),
    }
}

fn parse_rat(s: &str, line: usize) -> Result<Rat, ParseError> {
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n
            .parse()
            .map_err(|_| bad(line, format!("bad numerator `{n}`")))?;
        let d: BigInt = d
            .parse()
            .map_err(|_| bad(line, format!("bad denominator `{d}`")))?;
        Ok(Rat::new(n, d))
    } else {
        let n: BigInt = s
            .parse()
            .map_err(|_| bad(line, format!("bad number `{s}`")))?;
        Ok(Rat::from_integer(n))
    }
}

fn parse_int(s: &str, line: usize) -> Result<BigInt, ParseError> {
    s.parse()
        .map_err(|_| bad(line, format!("bad integer `{s}`")))
}

fn parse_int_list(s: &str, line: usize) -> Result<IntVec, ParseError> {
    s.split_whitespace().map(|t| parse_int(t, line)).collect()
}

// ---------------------------------------------------------------------------
// matrix text format: first line `rows cols`, then row-major integers

pub fn write_matrix(m: &IntMat) -> String {
    let mut out = format!("{} {}\n", m.rows(), m.cols());
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(|v| v.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_matrix(s: &str) -> Result<IntMat, ParseError> {
    let mut lines = s.lines().enumerate();
    let (ln, header) = lines
        .next()
        .ok_or_else(|| ParseError::Eof("matrix header".into()))?;
    let dims: Vec<&str> = header.split_whitespace().collect();
    if dims.len() != 2 {
        return Err(bad(ln + 1, "matrix header must be `rows cols`"));
    }
    let rows: usize = dims[0].parse().map_err(|_| bad(ln + 1, "bad row count"))?;
    let cols: usize = dims[1]
        .parse()
        .map_err(|_| bad(ln + 1, "bad column count"))?;
    let mut m = IntMat::zero(rows, cols);
    // entries may wrap lines arbitrarily: collect row-major tokens
    let mut entries = Vec::with_capacity(rows * cols);
    for (ln, line) in lines {
        for tok in line.split_whitespace() {
            entries.push(parse_int(tok, ln + 1)?);
        }
    }
    if entries.len() != rows * cols {
        return Err(bad(
            0,
            format!("expected {} entries, found {}", rows * cols, entries.len()),
        ));
    }
    for (idx, v) in entries.into_iter().enumerate() {
        m.set(idx / cols, idx % cols, v);
    }
    Ok(m)
}

// ---------------------------------------------------------------------------
// instance files

/// A parsed instance file: either a knapsack-shaped one (dkp-instance) or a
/// general system (ip-instance).
#[derive(Debug, Clone, PartialEq)]
pub enum Loaded {
    Knapsack {
        kp: Knapsack,
        name: Option<String>,
        provenance: Option<Provenance>,
    },
    General(IpInstance),
}

impl Loaded {
    pub fn instance(&self) -> IpInstance {
        match self {
            Loaded::Knapsack {
                kp,
                name,
                provenance,
            } => {
                let mut inst = kp.to_instance();
                inst.name = name.clone();
                inst.provenance = provenance.clone();
                inst
            }
            Loaded::General(inst) => inst.clone(),
        }
    }

    pub fn knapsack(&self) -> Option<&Knapsack> {
        match self {
            Loaded::Knapsack { kp, .. } => Some(kp),
            Loaded::General(_) => None,
        }
    }

    pub fn provenance(&self) -> Option<&Provenance> {
        match self {
            Loaded::Knapsack { provenance, .. } => provenance.as_ref(),
            Loaded::General(inst) => inst.provenance.as_ref(),
        }
    }
}

fn write_provenance(out: &mut String, p: &Provenance) {
    let ps: Vec<String> = p.p.iter().map(|v| v.to_string()).collect();
    let rs: Vec<String> = p.r.iter().map(|v| v.to_string()).collect();
    let _ = writeln!(out, "p {}", ps.join(" "));
    let _ = writeln!(out, "r {}", rs.join(" "));
    let _ = writeln!(out, "M {}", p.m_big);
    let _ = writeln!(out, "k {}", p.k);
}

pub fn write_knapsack(kp: &Knapsack, name: Option<&str>, prov: Option<&Provenance>) -> String {
    let mut out = String::from("dkp-instance v1\n");
    if let Some(n) = name {
        let _ = writeln!(out, "name {n}");
    }
    let eq = kp.is_equality();
    let _ = writeln!(out, "form {}", if eq { "eq" } else { "ineq" });
    let _ = writeln!(out, "n {}", kp.n());
    let a: Vec<String> = kp.a.iter().map(|v| v.to_string()).collect();
    let _ = writeln!(out, "a {}", a.join(" "));
    if eq {
        let _ = writeln!(out, "beta {}", kp.beta1);
    } else {
        let _ = writeln!(out, "beta1 {}", kp.beta1);
        let _ = writeln!(out, "beta2 {}", kp.beta2);
    }
    let u: Vec<String> =
        kp.u.iter()
            .map(|x| match x {
                UBound::Inf => "inf".to_string(),
                UBound::Finite(v) => v.to_string(),
            })
            .collect();
    let _ = writeln!(out, "u {}", u.join(" "));
    if let Some(p) = prov {
        write_provenance(&mut out, p);
    }
    out
}

pub fn write_general(inst: &IpInstance) -> String {
    let mut out = String::from("ip-instance v1\n");
    if let Some(n) = &inst.name {
        let _ = writeln!(out, "name {n}");
    }
    let _ = writeln!(out, "form ineq");
    let _ = writeln!(out, "n {}", inst.num_vars());
    let _ = writeln!(out, "m {}", inst.num_rows());
    out.push_str("A\n");
    for i in 0..inst.num_rows() {
        let row: Vec<String> = inst.a.row(i).iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    let lo: Vec<String> = inst.lo.iter().map(write_bound).collect();
    let hi: Vec<String> = inst.hi.iter().map(write_bound).collect();
    let _ = writeln!(out, "lo {}", lo.join(" "));
    let _ = writeln!(out, "hi {}", hi.join(" "));
    if let Some(p) = &inst.provenance {
        write_provenance(&mut out, p);
    }
    out
}

pub fn write_loaded(l: &Loaded) -> String {
    match l {
        Loaded::Knapsack {
            kp,
            name,
            provenance,
        } => write_knapsack(kp, name.as_deref(), provenance.as_ref()),
        Loaded::General(inst) => write_general(inst),
    }
}

pub fn parse_instance(s: &str) -> Result<Loaded, ParseError> {
    let mut lines = s.lines().enumerate().peekable();
    let (_, header) = lines
        .next()
        .ok_or_else(|| ParseError::Eof("header".into()))?;
    match header.trim() {
        "dkp-instance v1" => parse_knapsack_body(lines),
        "ip-instance v1" => parse_general_body(lines),
        other => Err(ParseError::UnknownHeader(other.to_string())),
    }
}

type Lines<'a> = std::iter::Peekable<std::iter::Enumerate<std::str::Lines<'a>>>;

fn parse_knapsack_body(lines: Lines<'_>) -> Result<Loaded, ParseError> {
    let mut name = None;
    let mut form = None;
    let mut n: Option<usize> = None;
    let mut a: Option<IntVec> = None;
    let mut beta: Option<BigInt> = None;
    let mut beta1: Option<BigInt> = None;
    let mut beta2: Option<BigInt> = None;
    let mut u: Option<Vec<UBound>> = None;
    let (mut pp, mut pr, mut pm, mut pk) = (None, None, None, None);
    for (ln, raw) in lines {
        let line = raw.trim_end();
        if line.is_empty() {
            continue;
        }
        let (key, rest) = line.split_once(' ').unwrap_or((line, ""));
        let ln1 = ln + 1;
        match key {
            "name" => name = Some(rest.to_string()),
            "form" => form = Some(rest.to_string()),
            "n" => n = Some(rest.parse().map_err(|_| bad(ln1, "bad n"))?),
            "a" => a = Some(parse_int_list(rest, ln1)?),
            "beta" => beta = Some(parse_int(rest, ln1)?),
            "beta1" => beta1 = Some(parse_int(rest, ln1)?),
            "beta2" => beta2 = Some(parse_int(rest, ln1)?),
            "u" => {
                u = Some(
                    rest.split_whitespace()
                        .map(|t| {
                            if t == "inf" {
                                Ok(UBound::Inf)
                            } else {
                                Ok(UBound::Finite(parse_int(t, ln1)?))
                            }
                        })
                        .collect::<Result<_, ParseError>>()?,
                )
            }
            "p" => pp = Some(parse_int_list(rest, ln1)?),
            "r" => pr = Some(parse_int_list(rest, ln1)?),
            "M" => pm = Some(parse_int(rest, ln1)?),
            "k" => pk = Some(parse_int(rest, ln1)?),
            other => return Err(bad(ln1, format!("unknown key `{other}`"))),
        }
    }
    let n = n.ok_or_else(|| ParseError::Eof("n".into()))?;
    let a = a.ok_or_else(|| ParseError::Eof("a".into()))?;
    let u = u.ok_or_else(|| ParseError::Eof("u".into()))?;
    if a.len() != n || u.len() != n {
        return Err(bad(0, "a/u length does not match n"));
    }
    let (b1, b2) = match (form.as_deref(), beta, beta1, beta2) {
        (Some("eq"), Some(b), None, None) => (b.clone(), b),
        (Some("ineq"), None, Some(b1), Some(b2)) => (b1, b2),
        _ => return Err(bad(0, "form/beta keys inconsistent")),
    };
    if b1 > b2 {
        return Err(bad(0, "beta1 > beta2"));
    }
    let provenance = match (pp, pr, pm, pk) {
        (Some(p), Some(r), Some(m_big), Some(k)) => {
            if p.len() != n || r.len() != n {
                return Err(bad(0, "provenance p/r length does not match n"));
            }
            Some(Provenance { p, r, m_big, k })
        }
        (None, None, None, None) => None,
        _ => return Err(bad(0, "incomplete provenance block (need p, r, M, k)")),
    };
    Ok(Loaded::Knapsack {
        kp: Knapsack::new(a, b1, b2, u),
        name,
        provenance,
    })
}

fn parse_general_body(mut lines: Lines<'_>) -> Result<Loaded, ParseError> {
    let mut name = None;
    let mut n: Option<usize> = None;
    let mut m: Option<usize> = None;
    let mut rows: Option<Vec<IntVec>> = None;
    let mut lo: Option<Vec<Bound>> = None;
    let mut hi: Option<Vec<Bound>> = None;
    let (mut pp, mut pr, mut pm, mut pk) = (None, None, None, None);
    while let Some((ln, raw)) = lines.next() {
        let line = raw.trim_end();
        if line.is_empty() {
            continue;
        }
        let ln1 = ln + 1;
        if line == "A" {
            let mcount = m.ok_or_else(|| bad(ln1, "m must precede the A block"))?;
            let ncount = n.ok_or_else(|| bad(ln1, "n must precede the A block"))?;
            let mut rs = Vec::with_capacity(mcount);
            for _ in 0..mcount {
                let (ln2, row) = lines
                    .next()
                    .ok_or_else(|| ParseError::Eof("matrix row".into()))?;
                let r = parse_int_list(row, ln2 + 1)?;
                if r.len() != ncount {
                    return Err(bad(ln2 + 1, "row width does not match n"));
                }
                rs.push(r);
            }
            rows = Some(rs);
            continue;
        }
        let (key, rest) = line.split_once(' ').unwrap_or((line, ""));
        match key {
            "name" => name = Some(rest.to_string()),
            "form" => {}
            "n" => n = Some(rest.parse().map_err(|_| bad(ln1, "bad n"))?),
            "m" => m = Some(rest.parse().map_err(|_| bad(ln1, "bad m"))?),
            "lo" => {
                lo = Some(
                    rest.split_whitespace()
                        .map(|t| parse_bound(t, ln1))
                        .collect::<Result<_, _>>()?,
                )
            }
            "hi" => {
                hi = Some(
                    rest.split_whitespace()
                        .map(|t| parse_bound(t, ln1))
                        .collect::<Result<_, _>>()?,
                )
            }
            "p" => pp = Some(parse_int_list(rest, ln1)?),
            "r" => pr = Some(parse_int_list(rest, ln1)?),
            "M" => pm = Some(parse_int(rest, ln1)?),
            "k" => pk = Some(parse_int(rest, ln1)?),
            other => return Err(bad(ln1, format!("unknown key `{other}`"))),
        }
    }
    let rows = rows.ok_or_else(|| ParseError::Eof("A block".into()))?;
    let lo = lo.ok_or_else(|| ParseError::Eof("lo".into()))?;
    let hi = hi.ok_or_else(|| ParseError::Eof("hi".into()))?;
    let mcount = rows.len();
    if lo.len() != mcount || hi.len() != mcount {
        return Err(bad(0, "lo/hi length does not match m"));
    }
    for (l, h) in lo.iter().zip(&hi) {
        if let (Bound::Finite(a), Bound::Finite(b)) = (l, h) {
            if a > b {
                return Err(bad(0, "row with lo > hi"));
            }
        }
    }
    let mut inst = IpInstance::new(IntMat::from_big_rows(rows), lo, hi);
    inst.name = name;
    inst.provenance = match (pp, pr, pm, pk) {
        (Some(p), Some(r), Some(m_big), Some(k)) => Some(Provenance { p, r, m_big, k }),
        (None, None, None, None) => None,
        _ => return Err(bad(0, "incomplete provenance block (need p, r, M, k)")),
    };
    Ok(Loaded::General(inst))
}

// ---------------------------------------------------------------------------
// reformulation bundles

#[derive(Debug, Clone, PartialEq)]
pub struct ReformBundle {
    pub method: String,
    pub reduction: ReductionMethod,
    pub original: Loaded,
    pub reformulated: IpInstance,
    pub u_mat: Option<IntMat>,
    pub v_mat: Option<IntMat>,
    pub v_star: Option<IntMat>,
    pub x_b: Option<IntVec>,
    pub eq_rows: Option<Vec<usize>>,
    pub x_r: Option<IntVec>,
}

pub fn write_bundle(b: &ReformBundle) -> String {
    let mut out = String::from("reform-bundle v1\n");
    let _ = writeln!(out, "method {}", b.method);
    let _ = writeln!(out, "reduction {}", b.reduction);
    out.push_str("begin-original\n");
    out.push_str(&write_loaded(&b.original));
    out.push_str("end-original\n");
    out.push_str("begin-reformulated\n");
    out.push_str(&write_general(&b.reformulated));
    out.push_str("end-reformulated\n");
    let mut put = |tag: &str, m: &IntMat| {
        let _ = writeln!(out, "begin-matrix {tag}");
        out.push_str(&write_matrix(m));
        out.push_str("end-matrix\n");
    };
    if let Some(u) = &b.u_mat {
        put("U", u);
    }
    if let Some(v) = &b.v_mat {
        put("V", v);
    }
    if let Some(vs) = &b.v_star {
        put("Vstar", vs);
    }
    if let Some(xb) = &b.x_b {
        let xs: Vec<String> = xb.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "x_b {}", xs.join(" "));
    }
    if let Some(xr) = &b.x_r {
        let xs: Vec<String> = xr.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "x_r {}", xs.join(" "));
    }
    if let Some(eq) = &b.eq_rows {
        let xs: Vec<String> = eq.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "eq-rows {}", xs.join(" "));
    }
    out
}

pub fn parse_bundle(s: &str) -> Result<ReformBundle, ParseError> {
    let mut lines = s.lines().enumerate().peekable();
    let (_, header) = lines
        .next()
        .ok_or_else(|| ParseError::Eof("header".into()))?;
    if header.trim() != "reform-bundle v1" {
        return Err(ParseError::UnknownHeader(header.to_string()));
    }
    let mut method = None;
    let mut reduction = None;
    let mut original = None;
    let mut reformulated = None;
    let mut u_mat = None;
    let mut v_mat = None;
    let mut v_star = None;
    let mut x_b = None;
    let mut x_r = None;
    let mut eq_rows: Option<Vec<usize>> = None;
    while let Some((ln, raw)) = lines.next() {
        let line = raw.trim_end();
        let ln1 = ln + 1;
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("method ") {
            method = Some(rest.to_string());
        } else if let Some(rest) = line.strip_prefix("reduction ") {
            reduction = Some(match rest {
                "lll" => ReductionMethod::Lll,
                "kz" => ReductionMethod::Kz,
                other => return Err(bad(ln1, format!("unknown reduction `{other}`"))),
            });
        } else if line == "begin-original" {
            let block = take_until(&mut lines, "end-original")?;
            original = Some(parse_instance(&block)?);
        } else if line == "begin-reformulated" {
            let block = take_until(&mut lines, "end-reformulated")?;
            match parse_instance(&block)? {
                Loaded::General(inst) => reformulated = Some(inst),
                Loaded::Knapsack { .. } => {
                    return Err(bad(ln1, "reformulated block must be a general instance"))
                }
            }
        } else if let Some(tag) = line.strip_prefix("begin-matrix ") {
            let block = take_until(&mut lines, "end-matrix")?;
            let m = parse_matrix(&block)?;
            match tag {
                "U" => u_mat = Some(m),
                "V" => v_mat = Some(m),
                "Vstar" => v_star = Some(m),
                other => return Err(bad(ln1, format!("unknown matrix tag `{other}`"))),
            }
        } else if let Some(rest) = line.strip_prefix("x_b ") {
            x_b = Some(parse_int_list(rest, ln1)?);
        } else if let Some(rest) = line.strip_prefix("x_r ") {
            x_r = Some(parse_int_list(rest, ln1)?);
        } else if let Some(rest) = line.strip_prefix("eq-rows") {
            eq_rows = Some(
                rest.split_whitespace()
                    .map(|t| t.parse().map_err(|_| bad(ln1, "bad row index")))
                    .collect::<Result<_, _>>()?,
            );
        } else {
            return Err(bad(ln1, format!("unexpected line `{line}`")));
        }
    }
    Ok(ReformBundle {
        method: method.ok_or_else(|| ParseError::Eof("method".into()))?,
        reduction: reduction.ok_or_else(|| ParseError::Eof("reduction".into()))?,
        original: original.ok_or_else(|| ParseError::Eof("original".into()))?,
        reformulated: reformulated.ok_or_else(|| ParseError::Eof("reformulated".into()))?,
        u_mat,
        v_mat,
        v_star,
        x_b,
        eq_rows,
        x_r,
    })
}

fn take_until(lines: &mut Lines<'_>, end: &str) -> Result<String, ParseError> {
    let mut out = String::new();
    for (_, raw) in lines.by_ref() {
        if raw.trim_end() == end {
            return Ok(out);
        }
        out.push_str(raw);
        out.push('\n');
    }
    Err(ParseError::Eof(format!("`{end}`")))
}

// ---------------------------------------------------------------------------
// branch traces

pub fn write_trace(trace: &[TraceLine]) -> String {
    let mut out = String::from("depth\tfixing\tlp\tdecision\n");
    for t in trace {
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{}",
            t.depth, t.fixing, t.lp_status, t.decision
        );
    }
    out
}
