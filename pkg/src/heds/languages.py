"""Full English language names from the ISO 639-1 code table.

Input/output language fields are expected to hold these standardised names
(e.g. "English, Herero, Hindi"). Matching is case-insensitive; common
alternate names from the code table (e.g. "Castilian" for Spanish) are
accepted too.
"""

from __future__ import annotations

import re
from typing import List, Tuple

# (primary name, alternate names...) per ISO 639-1 code.
LANGUAGES: Tuple[Tuple[str, ...], ...] = (
    ("Abkhazian",),
    ("Afar",),
    ("Afrikaans",),
    ("Akan",),
    ("Albanian",),
    ("Amharic",),
    ("Arabic",),
    ("Aragonese",),
    ("Armenian",),
    ("Assamese",),
    ("Avaric",),
    ("Avestan",),
    ("Aymara",),
    ("Azerbaijani",),
    ("Bambara",),
    ("Bashkir",),
    ("Basque",),
    ("Belarusian",),
    ("Bengali",),
    ("Bihari languages", "Bihari"),
    ("Bislama",),
    ("Bosnian",),
    ("Breton",),
    ("Bulgarian",),
    ("Burmese",),
    ("Catalan", "Valencian"),
    ("Central Khmer", "Khmer"),
    ("Chamorro",),
    ("Chechen",),
    ("Chichewa", "Chewa", "Nyanja"),
    ("Chinese",),
    ("Church Slavic", "Church Slavonic", "Old Church Slavonic", "Old Bulgarian"),
    ("Chuvash",),
    ("Cornish",),
    ("Corsican",),
    ("Cree",),
    ("Croatian",),
    ("Czech",),
    ("Danish",),
    ("Divehi", "Dhivehi", "Maldivian"),
    ("Dutch", "Flemish"),
    ("Dzongkha",),
    ("English",),
    ("Esperanto",),
    ("Estonian",),
    ("Ewe",),
    ("Faroese",),
    ("Fijian",),
    ("Finnish",),
    ("French",),
    ("Fulah", "Fula"),
    ("Gaelic", "Scottish Gaelic"),
    ("Galician",),
    ("Ganda", "Luganda"),
    ("Georgian",),
    ("German",),
    ("Greek", "Modern Greek"),
    ("Guarani",),
    ("Gujarati",),
    ("Haitian", "Haitian Creole"),
    ("Hausa",),
    ("Hebrew",),
    ("Herero",),
    ("Hindi",),
    ("Hiri Motu",),
    ("Hungarian",),
    ("Icelandic",),
    ("Ido",),
    ("Igbo",),
    ("Indonesian",),
    ("Interlingua",),
    ("Interlingue", "Occidental"),
    ("Inuktitut",),
    ("Inupiaq",),
    ("Irish",),
    ("Italian",),
    ("Japanese",),
    ("Javanese",),
    ("Kalaallisut", "Greenlandic"),
    ("Kannada",),
    ("Kanuri",),
    ("Kashmiri",),
    ("Kazakh",),
    ("Kikuyu", "Gikuyu"),
    ("Kinyarwanda",),
    ("Kirghiz", "Kyrgyz"),
    ("Komi",),
    ("Kongo",),
    ("Korean",),
    ("Kuanyama", "Kwanyama"),
    ("Kurdish",),
    ("Lao",),
    ("Latin",),
    ("Latvian",),
    ("Limburgan", "Limburger", "Limburgish"),
    ("Lingala",),
    ("Lithuanian",),
    ("Luba-Katanga",),
    ("Luxembourgish", "Letzeburgesch"),
    ("Macedonian",),
    ("Malagasy",),
    ("Malay",),
    ("Malayalam",),
    ("Maltese",),
    ("Manx",),
    ("Maori",),
    ("Marathi",),
    ("Marshallese",),
    ("Mongolian",),
    ("Nauru",),
    ("Navajo", "Navaho"),
    ("Ndonga",),
    ("Nepali",),
    ("North Ndebele",),
    ("Northern Sami",),
    ("Norwegian",),
    ("Norwegian Bokmål", "Norwegian Bokmal"),
    ("Norwegian Nynorsk",),
    ("Occitan",),
    ("Ojibwa", "Ojibwe"),
    ("Oriya", "Odia"),
    ("Oromo",),
    ("Ossetian", "Ossetic"),
    ("Pali",),
    ("Pashto", "Pushto"),
    ("Persian", "Farsi"),
    ("Polish",),
    ("Portuguese",),
    ("Punjabi", "Panjabi"),
    ("Quechua",),
    ("Romanian", "Moldavian", "Moldovan"),
    ("Romansh",),
    ("Rundi", "Kirundi"),
    ("Russian",),
    ("Samoan",),
    ("Sango",),
    ("Sanskrit",),
    ("Sardinian",),
    ("Serbian",),
    ("Shona",),
    ("Sichuan Yi", "Nuosu"),
    ("Sindhi",),
    ("Sinhala", "Sinhalese"),
    ("Slovak",),
    ("Slovenian", "Slovene"),
    ("Somali",),
    ("South Ndebele",),
    ("Southern Sotho", "Sotho", "Sesotho"),
    ("Spanish", "Castilian"),
    ("Sundanese",),
    ("Swahili",),
    ("Swati", "Swazi"),
    ("Swedish",),
    ("Tagalog",),
    ("Tahitian",),
    ("Tajik",),
    ("Tamil",),
    ("Tatar",),
    ("Telugu",),
    ("Thai",),
    ("Tibetan",),
    ("Tigrinya",),
    ("Tonga", "Tongan"),
    ("Tsonga",),
    ("Tswana", "Setswana"),
    ("Turkish",),
    ("Turkmen",),
    ("Twi",),
    ("Uighur", "Uyghur"),
    ("Ukrainian",),
    ("Urdu",),
    ("Uzbek",),
    ("Venda",),
    ("Vietnamese",),
    ("Volapük", "Volapuk"),
    ("Walloon",),
    ("Welsh",),
    ("Western Frisian", "Frisian"),
    ("Wolof",),
    ("Xhosa",),
    ("Yiddish",),
    ("Yoruba",),
    ("Zhuang", "Chuang"),
    ("Zulu",),
)

_ACCEPTED = frozenset(name.lower() for entry in LANGUAGES for name in entry)

_SPLIT_RE = re.compile(r",|;|\band\b|&", flags=re.IGNORECASE)


def is_language_name(name: str) -> bool:
    """True if ``name`` is a standardised full language name (any case)."""
    return name.strip().lower() in _ACCEPTED


def split_language_list(text: str) -> List[str]:
    """Split "English, Herero and Hindi" into its individual names."""
    return [part.strip() for part in _SPLIT_RE.split(text) if part.strip()]


def unknown_language_names(text: str) -> List[str]:
    """The entries in a language list that are not standardised names."""
    return [name for name in split_language_list(text) if not is_language_name(name)]
