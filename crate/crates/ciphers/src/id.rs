use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// One row of the finalist comparison: a family of schemes sharing a mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    Ascon,
    Elephant,
    GiftCofb,
    Grain128Aead,
    Isap,
    PhotonBeetle,
    RomulusN,
    Sparkle,
    TinyJambu,
    Xoodyak,
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::Ascon,
        Family::Elephant,
        Family::GiftCofb,
        Family::Grain128Aead,
        Family::Isap,
        Family::PhotonBeetle,
        Family::RomulusN,
        Family::Sparkle,
        Family::TinyJambu,
        Family::Xoodyak,
    ];

    /// The variant measured when only the family is named.
    pub fn primary(self) -> Variant {
        match self {
            Family::Ascon => Variant::Ascon128,
            Family::Elephant => Variant::ElephantDumbo,
            Family::GiftCofb => Variant::GiftCofb,
            Family::Grain128Aead => Variant::Grain128AeadV2,
            Family::Isap => Variant::IsapA128a,
            Family::PhotonBeetle => Variant::PhotonBeetleAead128,
            Family::RomulusN => Variant::RomulusN,
            Family::Sparkle => Variant::Schwaemm256_128,
            Family::TinyJambu => Variant::TinyJambu128,
            Family::Xoodyak => Variant::Xoodyak,
        }
    }

    pub fn variants(self) -> impl Iterator<Item = Variant> {
        Variant::ALL.into_iter().filter(move |v| v.family() == self)
    }

    /// Row label as printed in the comparison table.
    pub fn display_name(self) -> &'static str {
        match self {
            Family::Ascon => "ASCON",
            Family::Elephant => "Elephant",
            Family::GiftCofb => "GIFT-COFB",
            Family::Grain128Aead => "Grain-128AEAD",
            Family::Isap => "ISAP",
            Family::PhotonBeetle => "PHOTON-Beetle",
            Family::RomulusN => "Romulus-N",
            Family::Sparkle => "SPARKLE",
            Family::TinyJambu => "TinyJambu",
            Family::Xoodyak => "Xoodyak",
        }
    }

    /// Command-line slug.
    pub fn slug(self) -> &'static str {
        match self {
            Family::Ascon => "ascon",
            Family::Elephant => "elephant",
            Family::GiftCofb => "gift-cofb",
            Family::Grain128Aead => "grain-128aead",
            Family::Isap => "isap",
            Family::PhotonBeetle => "photon-beetle",
            Family::RomulusN => "romulus-n",
            Family::Sparkle => "sparkle",
            Family::TinyJambu => "tinyjambu",
            Family::Xoodyak => "xoodyak",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.display_name())
    }
}

/// A concrete, bit-exact parameterization of a family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[allow(non_camel_case_types)]
pub enum Variant {
    Ascon128,
    Ascon128a,
    ElephantDumbo,
    ElephantJumbo,
    ElephantDelirium,
    GiftCofb,
    Grain128AeadV2,
    IsapA128a,
    IsapA128,
    PhotonBeetleAead128,
    RomulusN,
    Schwaemm256_128,
    TinyJambu128,
    Xoodyak,
}

impl Variant {
    pub const ALL: [Variant; 14] = [
        Variant::Ascon128,
        Variant::Ascon128a,
        Variant::ElephantDumbo,
        Variant::ElephantJumbo,
        Variant::ElephantDelirium,
        Variant::GiftCofb,
        Variant::Grain128AeadV2,
        Variant::IsapA128a,
        Variant::IsapA128,
        Variant::PhotonBeetleAead128,
        Variant::RomulusN,
        Variant::Schwaemm256_128,
        Variant::TinyJambu128,
        Variant::Xoodyak,
    ];

    pub fn family(self) -> Family {
        match self {
            Variant::Ascon128 | Variant::Ascon128a => Family::Ascon,
            Variant::ElephantDumbo | Variant::ElephantJumbo | Variant::ElephantDelirium => {
                Family::Elephant
            }
            Variant::GiftCofb => Family::GiftCofb,
            Variant::Grain128AeadV2 => Family::Grain128Aead,
            Variant::IsapA128a | Variant::IsapA128 => Family::Isap,
            Variant::PhotonBeetleAead128 => Family::PhotonBeetle,
            Variant::RomulusN => Family::RomulusN,
            Variant::Schwaemm256_128 => Family::Sparkle,
            Variant::TinyJambu128 => Family::TinyJambu,
            Variant::Xoodyak => Family::Xoodyak,
        }
    }

    pub fn is_primary(self) -> bool {
        self.family().primary() == self
    }

    pub fn name(self) -> &'static str {
        match self {
            Variant::Ascon128 => "Ascon-128",
            Variant::Ascon128a => "Ascon-128a",
            Variant::ElephantDumbo => "Dumbo",
            Variant::ElephantJumbo => "Jumbo",
            Variant::ElephantDelirium => "Delirium",
            Variant::GiftCofb => "GIFT-COFB",
            Variant::Grain128AeadV2 => "Grain-128AEADv2",
            Variant::IsapA128a => "ISAP-A-128a",
            Variant::IsapA128 => "ISAP-A-128",
            Variant::PhotonBeetleAead128 => "PHOTON-Beetle-AEAD[128]",
            Variant::RomulusN => "Romulus-N",
            Variant::Schwaemm256_128 => "Schwaemm256-128",
            Variant::TinyJambu128 => "TinyJAMBU-128",
            Variant::Xoodyak => "Xoodyak",
        }
    }

    pub fn slug(self) -> &'static str {
        match self {
            Variant::Ascon128 => "ascon-128",
            Variant::Ascon128a => "ascon-128a",
            Variant::ElephantDumbo => "elephant-dumbo",
            Variant::ElephantJumbo => "elephant-jumbo",
            Variant::ElephantDelirium => "elephant-delirium",
            Variant::GiftCofb => "gift-cofb",
            Variant::Grain128AeadV2 => "grain-128aeadv2",
            Variant::IsapA128a => "isap-a-128a",
            Variant::IsapA128 => "isap-a-128",
            Variant::PhotonBeetleAead128 => "photon-beetle-aead128",
            Variant::RomulusN => "romulus-n",
            Variant::Schwaemm256_128 => "schwaemm256-128",
            Variant::TinyJambu128 => "tinyjambu-128",
            Variant::Xoodyak => "xoodyak",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown algorithm `{given}`; valid names: {}", valid_names().join(", "))]
pub struct UnknownAlgorithm {
    pub given: String,
}

/// Every accepted spelling, families first.
pub fn valid_names() -> Vec<&'static str> {
    Family::ALL
        .iter()
        .map(|f| f.slug())
        .chain(Variant::ALL.iter().map(|v| v.slug()))
        .fold(Vec::new(), |mut acc, s| {
            if !acc.contains(&s) {
                acc.push(s);
            }
            acc
        })
}

fn normalize(s: &str) -> String {
    s.trim()
        .to_ascii_lowercase()
        .chars()
        .filter(|c| !matches!(c, '[' | ']' | ' '))
        .map(|c| if c == '_' { '-' } else { c })
        .collect()
}

impl FromStr for Family {
    type Err = UnknownAlgorithm;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let n = normalize(s);
        Family::ALL
            .into_iter()
            .find(|f| f.slug() == n || normalize(f.display_name()) == n)
            .or(match n.as_str() {
                "grain" | "grain128aead" => Some(Family::Grain128Aead),
                "photon" | "photonbeetle" => Some(Family::PhotonBeetle),
                "romulus" => Some(Family::RomulusN),
                "schwaemm" => Some(Family::Sparkle),
                "tinyjambu" | "tiny-jambu" => Some(Family::TinyJambu),
                "gift" | "giftcofb" => Some(Family::GiftCofb),
                _ => None,
            })
            .ok_or(UnknownAlgorithm { given: s.to_string() })
    }
}

impl FromStr for Variant {
    type Err = UnknownAlgorithm;

    /// Accepts a variant slug or name, or a family name (meaning its primary variant).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let n = normalize(s);
        if let Some(v) = Variant::ALL
            .into_iter()
            .find(|v| v.slug() == n || normalize(v.name()) == n)
        {
            return Ok(v);
        }
        let alias = match n.as_str() {
            "dumbo" => Some(Variant::ElephantDumbo),
            "jumbo" => Some(Variant::ElephantJumbo),
            "delirium" => Some(Variant::ElephantDelirium),
            "photon-beetle-aead" => Some(Variant::PhotonBeetleAead128),
            "tinyjambu128" => Some(Variant::TinyJambu128),
            _ => None,
        };
        alias
            .map(Ok)
            .unwrap_or_else(|| s.parse::<Family>().map(Family::primary))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_slug_parses_back() {
        for f in Family::ALL {
            assert_eq!(f.slug().parse::<Family>().unwrap(), f);
            assert_eq!(f.slug().parse::<Variant>().unwrap().family(), f);
        }
        for v in Variant::ALL {
            assert_eq!(v.slug().parse::<Variant>().unwrap(), v);
            assert_eq!(v.name().parse::<Variant>().unwrap(), v);
        }
    }

    #[test]
    fn one_primary_per_family() {
        for f in Family::ALL {
            assert_eq!(f.variants().filter(|v| v.is_primary()).count(), 1);
        }
    }

    #[test]
    fn unknown_name_lists_choices() {
        let err = "chacha".parse::<Variant>().unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("chacha") && msg.contains("gift-cofb") && msg.contains("xoodyak"));
    }
}
