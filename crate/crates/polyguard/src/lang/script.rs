//! Unicode script classification by code-point range.
//!
//! Only the scripts the detector routes on are distinguished; everything
//! else lands in `Other`. Digits, punctuation, whitespace and symbols are
//! `Common` and never vote in script classification.

use serde::{Deserialize, Serialize};

/// Writing system of a character or segment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Script {
    Latin,
    Cyrillic,
    Greek,
    Arabic,
    Hebrew,
    Devanagari,
    Bengali,
    Gurmukhi,
    Gujarati,
    Oriya,
    Tamil,
    Telugu,
    Kannada,
    Malayalam,
    Sinhala,
    Thai,
    Lao,
    Tibetan,
    Myanmar,
    Georgian,
    Armenian,
    Ethiopic,
    Khmer,
    Han,
    Hiragana,
    Katakana,
    Hangul,
    /// Digits, punctuation, whitespace, symbols, combining marks.
    Common,
    /// A script the detector does not know.
    Other,
}

impl Script {
    /// True for scripts written with Latin letters (the only ones that can
    /// ever be classified as English).
    pub fn is_latin(&self) -> bool {
        matches!(self, Script::Latin)
    }

    /// The single language this script maps to in the supported set, when
    /// the mapping is unambiguous.
    pub fn unique_language(&self) -> Option<&'static str> {
        match self {
            Script::Greek => Some("el"),
            Script::Hebrew => Some("he"),
            Script::Bengali => Some("bn"),
            Script::Gurmukhi => Some("pa"),
            Script::Gujarati => Some("gu"),
            Script::Oriya => Some("or"),
            Script::Tamil => Some("ta"),
            Script::Telugu => Some("te"),
            Script::Kannada => Some("kn"),
            Script::Malayalam => Some("ml"),
            Script::Sinhala => Some("si"),
            Script::Thai => Some("th"),
            Script::Lao => Some("lo"),
            Script::Tibetan => Some("bo"),
            Script::Myanmar => Some("my"),
            Script::Georgian => Some("ka"),
            Script::Armenian => Some("hy"),
            Script::Ethiopic => Some("am"),
            Script::Khmer => Some("km"),
            Script::Han => Some("zh"),
            Script::Hiragana | Script::Katakana => Some("ja"),
            Script::Hangul => Some("ko"),
            _ => None,
        }
    }
}

/// Classifies a single character. Non-alphabetic characters are `Common`
/// whatever block they sit in, so script-block punctuation (the Arabic
/// question mark, the Devanagari danda) never votes.
pub fn script_of(c: char) -> Script {
    if !c.is_alphabetic() {
        return Script::Common;
    }
    let cp = c as u32;
    match cp {
        0x0041..=0x005A | 0x0061..=0x007A => Script::Latin,
        0x00C0..=0x00FF if cp != 0x00D7 && cp != 0x00F7 => Script::Latin,
        0x0100..=0x024F | 0x1E00..=0x1EFF | 0x2C60..=0x2C7F | 0xA720..=0xA7FF => Script::Latin,
        0x0370..=0x03FF | 0x1F00..=0x1FFF => Script::Greek,
        0x0400..=0x052F | 0x2DE0..=0x2DFF | 0xA640..=0xA69F => Script::Cyrillic,
        0x0530..=0x058F => Script::Armenian,
        0x0590..=0x05FF => Script::Hebrew,
        0x0600..=0x06FF | 0x0750..=0x077F | 0x08A0..=0x08FF | 0xFB50..=0xFDFF | 0xFE70..=0xFEFF => {
            Script::Arabic
        }
        0x0900..=0x097F | 0xA8E0..=0xA8FF => Script::Devanagari,
        0x0980..=0x09FF => Script::Bengali,
        0x0A00..=0x0A7F => Script::Gurmukhi,
        0x0A80..=0x0AFF => Script::Gujarati,
        0x0B00..=0x0B7F => Script::Oriya,
        0x0B80..=0x0BFF => Script::Tamil,
        0x0C00..=0x0C7F => Script::Telugu,
        0x0C80..=0x0CFF => Script::Kannada,
        0x0D00..=0x0D7F => Script::Malayalam,
        0x0D80..=0x0DFF => Script::Sinhala,
        0x0E00..=0x0E7F => Script::Thai,
        0x0E80..=0x0EFF => Script::Lao,
        0x0F00..=0x0FFF => Script::Tibetan,
        0x1000..=0x109F => Script::Myanmar,
        0x10A0..=0x10FF => Script::Georgian,
        0x1200..=0x137F => Script::Ethiopic,
        0x1780..=0x17FF => Script::Khmer,
        0x1100..=0x11FF | 0x3130..=0x318F | 0xAC00..=0xD7AF => Script::Hangul,
        0x3040..=0x309F => Script::Hiragana,
        0x30A0..=0x30FF | 0x31F0..=0x31FF => Script::Katakana,
        0x3400..=0x4DBF | 0x4E00..=0x9FFF | 0xF900..=0xFAFF => Script::Han,
        _ => Script::Other,
    }
}

/// The dominant script of a text: the script with the most characters,
/// ignoring `Common`. Ties break on the smaller enum value. Returns
/// `Common` when no script characters exist at all.
pub fn dominant_script(text: &str) -> Script {
    let mut counts: std::collections::BTreeMap<Script, usize> = std::collections::BTreeMap::new();
    for c in text.chars() {
        let s = script_of(c);
        if s != Script::Common {
            *counts.entry(s).or_insert(0) += 1;
        }
    }
    counts
        .into_iter()
        .max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)))
        .map(|(script, _)| script)
        .unwrap_or(Script::Common)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classifies_representative_characters() {
        assert_eq!(script_of('a'), Script::Latin);
        assert_eq!(script_of('ạ'), Script::Latin); // Vietnamese
        assert_eq!(script_of('ü'), Script::Latin);
        assert_eq!(script_of('ж'), Script::Cyrillic);
        assert_eq!(script_of('م'), Script::Arabic);
        assert_eq!(script_of('گ'), Script::Arabic); // Persian gaf
        assert_eq!(script_of('न'), Script::Devanagari);
        assert_eq!(script_of('ก'), Script::Thai);
        assert_eq!(script_of('中'), Script::Han);
        assert_eq!(script_of('あ'), Script::Hiragana);
        assert_eq!(script_of('한'), Script::Hangul);
        assert_eq!(script_of('ම'), Script::Sinhala);
    }

    #[test]
    fn digits_punctuation_and_space_are_common() {
        for c in ['1', '.', ',', ' ', '?', '؟', '|', '(', '€'] {
            assert_eq!(script_of(c), Script::Common, "{c:?}");
        }
    }

    #[test]
    fn dominant_script_ignores_common_characters() {
        assert_eq!(dominant_script("नमस्ते 123!!"), Script::Devanagari);
        assert_eq!(dominant_script("hello world"), Script::Latin);
        assert_eq!(dominant_script("... 42"), Script::Common);
    }

    #[test]
    fn majority_wins_on_mixed_script_text() {
        assert_eq!(dominant_script("abc नमस्ते नमस्ते"), Script::Devanagari);
    }

    #[test]
    fn multiplication_and_division_signs_are_not_latin() {
        assert_eq!(script_of('×'), Script::Common);
        assert_eq!(script_of('÷'), Script::Common);
    }
}
