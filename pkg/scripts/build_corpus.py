#!/usr/bin/env python3
"""Regenerate the bundled fixture corpus and the gold standard file.

Developer tool, not part of the installed package. Run from the
repository root after editing the source texts below, the lexicon, or
the rules, then review the diff under src/corpws/data/corpus/ and
src/corpws/data/gold/. The script prints every token that tagged as
unknown (Gwann) or non-Welsh (Gwest) so unintended gaps in the lexicon
show up immediately.
"""

from __future__ import annotations

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from corpws.corpus import DocMeta, ingest, write_vertical  # noqa: E402

# Tokens we expect to stay unknown or non-Welsh on purpose.
EXPECTED_ODD = {"email"}

DOCS: list[tuple[DocMeta, str]] = [
    (
        DocMeta(id="hanes-y-fro", language_type="written", genre="book",
                region="Gwynedd", source="Gwasg y Cwm"),
        """\
Mae Cymru'n wlad Geltaidd. Roedd yr eisteddfod genedlaethol yn bwysig
i bawb yn y wlad. Aeth y teulu i'r dref ar y trên. Gwelodd y plant yr
afon a'r bont wedyn. Roedd yr orsaf yn hen ond roedd y neuadd yn
newydd. Canodd y merched gân yn y neuadd fawr. Prynodd Dafydd lyfr am
hanes y wlad yn y siop. Darllenodd ei chwaer y llyfr wedyn. Roedd
hanes yr ardal yn ddiddorol iawn. Cerddodd y bachgen i'r cae gyda'r
ci. Roedd y ceffyl wrth y bont. Eisteddodd y tad wrth y drws. Bwytodd
y plant yr afalau yn yr ardd. Roedd pawb yn hapus yn yr haf. Daeth
croeso mawr i'r eisteddfod o bob tref a phentref. Gwnaeth y dyn waith
da ar y tŷ. Roedd dwy gath a dau gi yn byw ar y cae. Aeth y trên
trwy'r cwm at y môr. Roedd y wlad yn hyfryd yn yr haf. Felly daeth yr
haf i'r ardal eto.
""",
    ),
    (
        DocMeta(id="papur-y-cwm", language_type="written", genre="papur_bro",
                region="Gwynedd", source="Papur y Cwm"),
        """\
Bore da i bawb yn yr ardal. Mae'r eisteddfod yn dod i'r dref yn yr
haf. Bydd y plant yn canu yn y neuadd. Bydd te a bara a chaws yn yr
eglwys. Daeth stori newydd o'r ysgol. Agorodd siop newydd wrth y bont
ddoe. Mae bara a llaeth a chaws yn y siop. Prynodd Elin dorth yno
ddoe. Bydd cinio mawr yn y neuadd yfory. Diolch yn fawr i bawb am y
croeso. Wel, daeth yr haf i'r cwm eto.
""",
    ),
    (
        DocMeta(id="llythyr-at-elin", language_type="written", genre="letter",
                region="Caerdydd"),
        """\
Bore da Elin. Diolch am dy stori. Mae'r teulu yn iawn yma yn y
ddinas. Mae dy frawd yn gweithio yn y swyddfa nawr. Mae fy nghath yn
chwarae yn yr ardd trwy'r dydd. Gwelodd Tomos dy ffrind yn y dref
ddoe. Roedd hi'n braf iawn yma ddoe. Aeth y teulu i'r parc wedyn.
Bwytodd y plant ginio yn y parc. Bydd croeso mawr i ti yma yn yr
haf. Diolch eto am bopeth. Nos da, Elin.
""",
    ),
    (
        DocMeta(id="cylchgrawn-can", language_type="written",
                genre="magazine", source="Y Gân"),
        """\
Mae'r gân newydd gan Siân yn hyfryd. Canodd hi yn yr eisteddfod
genedlaethol yn Llanelli. Roedd y neuadd fawr yn brysur iawn. Daeth
pawb allan wedyn. Mae rhaglen newydd am ganu yn dod yn yr haf. Bydd
hi'n canu yn y ddinas eto yfory. Mae'r coleg yn agor y drws i'r gân
newydd. Diolch i'r athro am y gwaith mawr.
""",
    ),
    (
        DocMeta(id="traethawd-iaith", language_type="written",
                genre="essays_coursework_and_exams", source="Ysgol y Cwm"),
        """\
Mae'r iaith yn bwysig i'r wlad. Mae'r Gymraeg yn iaith Geltaidd.
Roedd yr ysgol yn dysgu hanes Cymru i'r plant. Mae geiriau newydd yn
dod i'r iaith. Mae ieithoedd y byd yn bwysig hefyd. Roedd pawb yn
siarad yr iaith yn y pentref. Mae'r ysgolion yn dysgu'r plant
heddiw. Bydd y plant yn darllen llyfrau yn yr ysgol. Mae darllen yn
agor drws i'r byd. Felly mae'r gair yn gryf. Nid yw popeth yn
newydd, ond mae'r iaith yn byw.
""",
    ),
    (
        DocMeta(id="sgwrs-radio", language_type="spoken", genre="broadcast",
                region="Caerdydd", source="Radio'r Ddinas"),
        """\
Bore da, a chroeso i'r rhaglen. Diolch yn fawr i chi. Wel, mae hi'n
braf yn y ddinas heddiw. Mae'r eisteddfod yn dod i Gaerdydd yn yr
haf. Bydd canu a chwarae yn y parc trwy'r dydd. Gwelodd pawb y
rhaglen am yr eisteddfod ddoe. Roedd hi'n hyfryd iawn. Diolch am y
stori, a nos da i bawb. Nos da.
""",
    ),
    (
        DocMeta(id="gwers-hanes", language_type="spoken", genre="educational",
                region="Gwynedd", source="Ysgol Bangor"),
        """\
Bore da, blant. Bore da. Heddiw mae hanes y wlad gyda ni. Mae llyfrau
ar y ddesg. Agorodd Tomos y llyfr ar y stori am y llong. Darllenodd y
ferch y geiriau yn dda iawn. Mae'r llong yn mynd at yr ynys. Gwelodd
y dyn y môr mawr. Da iawn, blant. Diolch. Bydd stori newydd gyda ni
yfory. Hwrê!
""",
    ),
    (
        DocMeta(id="sgwrs-gegin", language_type="spoken", genre="private",
                region="Gwynedd", sensitive=True),
        """\
Wel, bore da. Te neu goffi? Coffi, diolch. Mae hi'n oer heddiw.
Mae'r cythraul yn y cae eto. Aeth y ci trwy'r ardd ddoe. Y cythraul
bach! Bwytodd y cythraul y caws a'r bara. Wel, nid yw hyn yn dda.
Mae te yn y cwpan i ti. Diolch yn fawr. Bydd cinio yma wedyn. Nos
da, ti a'r cythraul bach.
""",
    ),
    (
        DocMeta(id="blog-taith", language_type="elanguage", genre="blog",
                source="blog.enghraifft.cymru"),
        """\
Bore da o Abertawe! Daeth y trên i'r orsaf am naw. Cerddodd y
ffrindiau i'r eglwys fawr. Roedd yr hanes yn ddiddorol. Roedd cinio
da mewn siop fach wrth y bont. Prynodd fy ffrind lyfr am yr ynys.
Aeth y llong allan ar y môr. Roedd y nos yn oer ond roedd pawb yn
hapus. Bydd mwy o hanes yfory. Nos da o Abertawe.
""",
    ),
    (
        DocMeta(id="ebost-gwaith", language_type="elanguage", genre="email",
                source="swyddfa@enghraifft.cymru"),
        """\
Bore da bawb. Diolch am y gwaith ar y rhaglen newydd. Mae'r swyddfa
yn brysur iawn yr wythnos hon. Bydd Dafydd yn gweithio o'r tŷ
yfory. Bydd cinio gwaith yn y neuadd am un. Mae croeso i chi ddod.
Mae'r email hwn yn mynd at bawb. Diolch yn fawr. Siân.
""",
    ),
    (
        DocMeta(id="neges-sms", language_type="elanguage", genre="SMS"),
        """\
Bore da! Mae'r trên yn dod am ddeg. Iawn, diolch. Bydd te poeth
yma. Da iawn. Nos da!
""",
    ),
]

# The gold standard exercises every document text plus a few extra
# sentences aimed at tricky analyses (preverbal particles, pronoun i,
# plural objects, negation).
GOLD_EXTRA = """\
Fe welodd y dyn y ceffyl. Mi ganodd hi yn yr eglwys. Rhedodd y ci at
y drws. Gwelodd hi fi wrth y siop. Nid yw'r plant yma heddiw. Mae tri
thŷ ar y cae. Roedd pedwar ceffyl yn y cwm. Eisteddodd y gath fach ar
y gadair. Mae'r ferch yn darllen llyfrau am hanes y byd. Aeth ef adre
ar y trên o'r ddinas.
"""


def main() -> int:
    corpus_dir = ROOT / "src" / "corpws" / "data" / "corpus"
    gold_dir = ROOT / "src" / "corpws" / "data" / "gold"
    corpus_dir.mkdir(parents=True, exist_ok=True)
    gold_dir.mkdir(parents=True, exist_ok=True)

    odd: list[tuple[str, str, str]] = []
    manifest_lines: list[str] = []
    total_tokens = 0
    total_words = 0

    for meta, text in DOCS:
        doc = ingest(" ".join(text.split("\n")).strip(), meta)
        total_tokens += doc.n_tokens
        total_words += doc.n_words
        for tok in doc.tokens:
            if tok.rich in ("Gwann", "Gwest"):
                odd.append((meta.id, tok.text, tok.rich))
        filename = f"{meta.id}.vrt"
        (corpus_dir / filename).write_text(write_vertical(doc),
                                           encoding="utf-8")
        manifest_lines.append(f"{meta.id}\t{filename}")

    (corpus_dir / "manifest.txt").write_text(
        "\n".join(manifest_lines) + "\n", encoding="utf-8")

    gold_text = " ".join(
        " ".join(text.split("\n")).strip() for _, text in DOCS)
    gold_text += " " + " ".join(GOLD_EXTRA.split("\n")).strip()
    gold_meta = DocMeta(id="gold", language_type="written",
                        genre="miscellaneous", source="fixture gold standard")
    gold = ingest(gold_text, gold_meta)
    (gold_dir / "gold.vrt").write_text(write_vertical(gold),
                                       encoding="utf-8")

    sentences = len(gold.sentences())
    print(f"corpus: {len(DOCS)} documents, {total_tokens} tokens, "
          f"{total_words} words")
    print(f"gold: {sentences} sentences, {gold.n_tokens} tokens")
    surprises = [(d, t, r) for d, t, r in odd if t.casefold()
                 not in EXPECTED_ODD]
    for doc_id, text, rich in surprises:
        print(f"  UNEXPECTED {rich}: {text!r} in {doc_id}")
    if surprises:
        return 1
    print("no unexpected unknown or non-Welsh tokens")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
