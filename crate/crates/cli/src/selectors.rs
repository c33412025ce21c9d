//! Mapping between CLI selector tokens and the library's typed selectors.
//!
//! Selector names are the lowercase identity/family tokens; numeric
//! parameters arrive as the flags `--k`, `--n`, `--m`, `--r`.

use qtrunc::{FamilyId, IdentityId, PartitionFunctionId};

/// Optional numeric parameters collected from the command line.
#[derive(Clone, Copy, Default)]
pub struct Params {
    pub k: Option<u32>,
    pub n: Option<u32>,
    pub m: Option<u32>,
    pub r: Option<u32>,
}

impl Params {
    fn k(&self, token: &str) -> Result<u32, String> {
        self.k.ok_or_else(|| format!("selector '{token}' requires --k"))
    }

    fn n(&self, token: &str) -> Result<u32, String> {
        self.n.ok_or_else(|| format!("selector '{token}' requires --n"))
    }

    fn m_r(&self, token: &str) -> Result<(u32, u32), String> {
        match (self.m, self.r) {
            (Some(m), Some(r)) => Ok((m, r)),
            _ => Err(format!("selector '{token}' requires --m and --r")),
        }
    }
}

fn check_m_r(token: &str, m: u32, r: u32) -> Result<(), String> {
    if r >= 1 && 2 * r <= m {
        Ok(())
    } else {
        Err(format!("selector '{token}' requires 1 <= r <= m/2, got m={m} r={r}"))
    }
}

pub fn parse_function(token: &str, params: &Params) -> Result<PartitionFunctionId, String> {
    match token {
        "p" => Ok(PartitionFunctionId::P),
        "overp" => Ok(PartitionFunctionId::Overp),
        "pod" => Ok(PartitionFunctionId::Pod),
        "jmr" => {
            let (m, r) = params.m_r(token)?;
            check_m_r(token, m, r)?;
            Ok(PartitionFunctionId::Jmr { m, r })
        }
        "t3" => Ok(PartitionFunctionId::T3),
        _ => Err(format!("unknown function '{token}' (expected p, overp, pod, jmr, t3)")),
    }
}

pub fn function_token(id: PartitionFunctionId) -> &'static str {
    match id {
        PartitionFunctionId::P => "p",
        PartitionFunctionId::Overp => "overp",
        PartitionFunctionId::Pod => "pod",
        PartitionFunctionId::Jmr { .. } => "jmr",
        PartitionFunctionId::T3 => "t3",
    }
}

pub fn parse_identity(token: &str, params: &Params) -> Result<IdentityId, String> {
    let id = match token {
        "euler_pent" => IdentityId::EulerPent,
        "gauss_square" => IdentityId::GaussSquare,
        "gauss_triangular" => IdentityId::GaussTriangular,
        "jacobi_cube" => IdentityId::JacobiCube,
        "am_truncated" => IdentityId::AmTruncated { k: params.k(token)? },
        "thm1" => IdentityId::Thm1 { k: params.k(token)? },
        "thm3" => IdentityId::Thm3 { k: params.k(token)? },
        "newovp" => IdentityId::NewOvp { k: params.k(token)? },
        "qbt_special" => IdentityId::QbtSpecial { k: params.k(token)? },
        "agj" => IdentityId::Agj { n: params.n(token)? },
        "agj_gauss" => IdentityId::AgjGauss { n: params.n(token)? },
        "shanks" => IdentityId::Shanks { n: params.n(token)? },
        "jtp_special" => {
            let (m, r) = params.m_r(token)?;
            check_m_r(token, m, r)?;
            IdentityId::JtpSpecial { m, r }
        }
        "lemma_s2" => IdentityId::LemmaS2 { n: params.n(token)?, k: params.k(token)? },
        "lemma_s5" => IdentityId::LemmaS5 { n: params.n(token)?, k: params.k(token)? },
        _ => return Err(format!("unknown identity '{token}'")),
    };
    match id {
        IdentityId::AmTruncated { k }
        | IdentityId::Thm1 { k }
        | IdentityId::Thm3 { k }
        | IdentityId::NewOvp { k }
            if k < 1 =>
        {
            Err(format!("selector '{token}' requires k >= 1"))
        }
        IdentityId::LemmaS2 { n, .. } | IdentityId::LemmaS5 { n, .. } if n < 1 => {
            Err(format!("selector '{token}' requires n >= 1"))
        }
        IdentityId::LemmaS5 { k, .. } if k < 1 => {
            Err(format!("selector '{token}' requires k >= 1"))
        }
        _ => Ok(id),
    }
}

pub fn identity_token(id: IdentityId) -> &'static str {
    match id {
        IdentityId::EulerPent => "euler_pent",
        IdentityId::GaussSquare => "gauss_square",
        IdentityId::GaussTriangular => "gauss_triangular",
        IdentityId::AmTruncated { .. } => "am_truncated",
        IdentityId::Thm1 { .. } => "thm1",
        IdentityId::Thm3 { .. } => "thm3",
        IdentityId::Agj { .. } => "agj",
        IdentityId::AgjGauss { .. } => "agj_gauss",
        IdentityId::QbtSpecial { .. } => "qbt_special",
        IdentityId::Shanks { .. } => "shanks",
        IdentityId::JtpSpecial { .. } => "jtp_special",
        IdentityId::JacobiCube => "jacobi_cube",
        IdentityId::LemmaS2 { .. } => "lemma_s2",
        IdentityId::LemmaS5 { .. } => "lemma_s5",
        IdentityId::NewOvp { .. } => "newovp",
    }
}

pub fn identity_params(id: IdentityId) -> Vec<(&'static str, u32)> {
    match id {
        IdentityId::EulerPent
        | IdentityId::GaussSquare
        | IdentityId::GaussTriangular
        | IdentityId::JacobiCube => vec![],
        IdentityId::AmTruncated { k }
        | IdentityId::Thm1 { k }
        | IdentityId::Thm3 { k }
        | IdentityId::QbtSpecial { k }
        | IdentityId::NewOvp { k } => vec![("k", k)],
        IdentityId::Agj { n } | IdentityId::AgjGauss { n } | IdentityId::Shanks { n } => {
            vec![("n", n)]
        }
        IdentityId::JtpSpecial { m, r } => vec![("m", m), ("r", r)],
        IdentityId::LemmaS2 { n, k } | IdentityId::LemmaS5 { n, k } => {
            vec![("n", n), ("k", k)]
        }
    }
}

pub fn parse_family(token: &str, params: &Params) -> Result<FamilyId, String> {
    match token {
        "am" => Ok(FamilyId::Am),
        "cor2" => Ok(FamilyId::Cor2),
        "cor4" => Ok(FamilyId::Cor4),
        "conj1" => {
            let (m, r) = params.m_r(token)?;
            check_m_r(token, m, r)?;
            Ok(FamilyId::Conj1 { m, r })
        }
        "conj2" => Ok(FamilyId::Conj2),
        "rr1" => Ok(FamilyId::Rr1),
        "rr2" => Ok(FamilyId::Rr2),
        "conj3" => Ok(FamilyId::Conj3),
        _ => Err(format!(
            "unknown family '{token}' (expected am, cor2, cor4, conj1, conj2, rr1, rr2, conj3)"
        )),
    }
}

pub fn family_token(family: FamilyId) -> &'static str {
    match family {
        FamilyId::Am => "am",
        FamilyId::Cor2 => "cor2",
        FamilyId::Cor4 => "cor4",
        FamilyId::Conj1 { .. } => "conj1",
        FamilyId::Conj2 => "conj2",
        FamilyId::Rr1 => "rr1",
        FamilyId::Rr2 => "rr2",
        FamilyId::Conj3 => "conj3",
    }
}

pub fn family_params(family: FamilyId) -> Vec<(&'static str, u32)> {
    match family {
        FamilyId::Conj1 { m, r } => vec![("m", m), ("r", r)],
        _ => vec![],
    }
}
