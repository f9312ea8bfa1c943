"""Regenerate the bundled knowledge-graph triples.

The triples are hand-curated here rather than edited as raw JSONL so
entity references stay honest: every subject and entity-valued object
is resolved through the gazetteer, and the finished file is loaded
back through the validating reader before it is written over the old
one.

Run from the repository root:

    python3 scripts/build_kg.py
"""

from __future__ import annotations

import sys
from pathlib import Path

SRC = Path(__file__).resolve().parent.parent / "src"
sys.path.insert(0, str(SRC))

from parley.dataio import write_jsonl  # noqa: E402
from parley.gazetteer import default_gazetteer  # noqa: E402
from parley.kg import load_kg  # noqa: E402
from parley.types import is_qid  # noqa: E402

OUT = SRC / "parley" / "data" / "kg" / "triples.jsonl"

GAZ = default_gazetteer()


def eid(name_or_id: str) -> str:
    """Resolve a canonical name (or pass through a Q-id) to an entity
    id, refusing ambiguous names so the data stays unambiguous."""
    if is_qid(name_or_id):
        if GAZ.get(name_or_id) is None:
            raise SystemExit(f"unknown entity id {name_or_id}")
        return name_or_id
    hits = GAZ.exact(name_or_id)
    if len(hits) != 1:
        raise SystemExit(f"{name_or_id!r} has {len(hits)} gazetteer matches; use an id")
    return hits[0].entity_id


def E(name_or_id: str) -> tuple[str, str]:
    return eid(name_or_id), "entity"


def L(text: str) -> tuple[str, str]:
    return text, "literal"


# subject -> [(relation, (object, kind)), ...]
TRIPLES: list[tuple[str, list[tuple[str, tuple[str, str]]]]] = [
    # ------------------------------------------------------------------ tv
    ("Q79784", [  # Friends the show; a song shares the name
        ("cast", E("jennifer aniston")),
        ("cast", L("Courteney Cox")),
        ("cast", L("David Schwimmer")),
        ("role", L("Rachel Green, played by Jennifer Aniston")),
        ("creator", L("David Crane and Marta Kauffman")),
        ("genre", L("sitcom")),
        ("awards", L("the Primetime Emmy for Outstanding Comedy Series in 2002")),
    ]),
    ("Q90000664", [  # the US Office; the original is Q90000665
        ("cast", E("steve carell")),
        ("cast", L("Rainn Wilson")),
        ("role", L("Michael Scott, played by Steve Carell")),
        ("creator", L("Greg Daniels, adapting the British original")),
        ("genre", L("mockumentary sitcom")),
        ("awards", L("five Primetime Emmy Awards")),
    ]),
    ("breaking bad", [
        ("cast", L("Bryan Cranston")),
        ("cast", L("Aaron Paul")),
        ("role", L("Walter White, played by Bryan Cranston")),
        ("creator", L("Vince Gilligan")),
        ("genre", L("crime drama")),
        ("awards", L("sixteen Primetime Emmy Awards")),
    ]),
    ("game of thrones", [
        ("cast", L("Emilia Clarke")),
        ("cast", L("Kit Harington")),
        ("creator", L("David Benioff and D.B. Weiss")),
        ("genre", L("fantasy drama")),
        ("awards", L("59 Primetime Emmys, the most of any drama series")),
    ]),
    ("stranger things", [
        ("cast", L("Millie Bobby Brown")),
        ("cast", L("Winona Ryder")),
        ("creator", L("the Duffer Brothers")),
        ("genre", L("science fiction horror")),
        ("awards", L("a dozen Emmy nominations for its first season alone")),
    ]),
    ("the crown", [
        ("cast", L("Claire Foy")),
        ("cast", L("Olivia Colman")),
        ("creator", L("Peter Morgan")),
        ("genre", L("historical drama")),
        ("awards", L("the Golden Globe for Best Television Drama")),
    ]),
    # -------------------------------------------------------------- movies
    ("the dark knight", [
        ("cast", E("christian bale")),
        ("cast", E("heath ledger")),
        ("genre", L("superhero crime thriller")),
        ("awards", L("two Academy Awards")),
    ]),
    ("inception", [
        ("cast", E("leonardo dicaprio")),
        ("genre", L("science fiction heist")),
        ("awards", L("four Academy Awards")),
    ]),
    ("parasite", [
        ("cast", L("Song Kang-ho")),
        ("genre", L("dark comedy thriller")),
        ("awards", L("the Best Picture Oscar, the first for a non-English film")),
    ]),
    ("toy story", [
        ("voiceCast", E("tom hanks")),
        ("voiceCast", L("Tim Allen")),
        ("genre", L("animated adventure comedy")),
        ("awards", L("a Special Achievement Academy Award")),
    ]),
    ("tom hanks", [
        ("spouse", L("Rita Wilson")),
        ("childrenNum", L("four")),
        ("awards", L("back-to-back Best Actor Oscars")),
    ]),
    ("meryl streep", [
        ("spouse", L("Don Gummer")),
        ("childrenNum", L("four")),
        ("awards", L("three Oscars from a record 21 nominations")),
    ]),
    ("leonardo dicaprio", [
        ("awards", L("the Best Actor Oscar for The Revenant")),
    ]),
    ("christian bale", [
        ("spouse", L("Sibi Blazic")),
        ("childrenNum", L("two")),
        ("awards", L("the Best Supporting Actor Oscar for The Fighter")),
    ]),
    ("heath ledger", [
        ("awards", L("a posthumous Oscar for The Dark Knight")),
    ]),
    ("christopher nolan", [
        ("spouse", L("Emma Thomas, who produces all of his films")),
        ("childrenNum", L("four")),
        ("awards", L("the Best Director Oscar")),
    ]),
    ("adam driver", [
        ("spouse", L("Joanne Tucker")),
        ("awards", L("two Academy Award nominations")),
    ]),
    ("cate blanchett", [
        ("spouse", L("Andrew Upton")),
        ("childrenNum", L("four")),
        ("awards", L("two Academy Awards")),
    ]),
    ("jennifer aniston", [
        ("awards", L("a Primetime Emmy for Outstanding Lead Actress in a Comedy Series")),
    ]),
    ("emma stone", [
        ("awards", L("two Best Actress Oscars")),
    ]),
    ("steve carell", [
        ("spouse", L("Nancy Carell")),
        ("childrenNum", L("two")),
        ("awards", L("a Golden Globe for The Office")),
    ]),
    # --------------------------------------------------------------- music
    ("the beatles", [
        ("genre", L("rock")),
        ("awards", L("seven Grammys and an Oscar for their film scores")),
        ("label", L("Apple Records, a label they founded themselves")),
    ]),
    ("paul mccartney", [
        ("memberOf", E("the beatles")),
        ("instrument", L("bass guitar and piano")),
        ("awards", L("eighteen Grammy Awards across his career")),
    ]),
    ("john lennon", [
        ("memberOf", E("the beatles")),
        ("instrument", L("rhythm guitar")),
    ]),
    ("Q90000881", [  # the song Let It Be, not the film
        ("performer", E("the beatles")),
    ]),
    ("Q90000876", [  # the song Bohemian Rhapsody, not the film
        ("performer", E("Q90001321")),
        ("genre", L("progressive rock")),
    ]),
    ("Q90001321", [  # Queen, the band
        ("genre", L("arena rock")),
        ("awards", L("a place in the Rock and Roll Hall of Fame")),
        ("label", L("EMI")),
    ]),
    ("freddie mercury", [
        ("memberOf", E("Q90001321")),
        ("instrument", L("piano, alongside his four-octave voice")),
    ]),
    ("taylor swift", [
        ("genre", L("pop, with country roots")),
        ("awards", L("fourteen Grammys, including four Album of the Year wins")),
        ("label", L("Republic Records")),
        ("instrument", L("guitar, piano and banjo")),
    ]),
    ("shake it off", [
        ("performer", E("taylor swift")),
    ]),
    ("beyonce", [
        ("memberOf", E("destinys child")),
        ("genre", L("R&B and pop")),
        ("awards", L("32 Grammys, more than any other artist")),
        ("label", L("Parkwood Entertainment, her own company")),
    ]),
    ("destinys child", [
        ("genre", L("R&B")),
        ("awards", L("two Grammys for Say My Name")),
    ]),
    ("fleetwood mac", [
        ("genre", L("rock")),
        ("awards", L("the Album of the Year Grammy for Rumours")),
        ("label", L("Warner Bros. Records")),
    ]),
    ("billy joel", [
        ("instrument", L("piano")),
        ("genre", L("piano rock")),
        ("awards", L("five Grammy Awards")),
    ]),
    ("piano man", [
        ("performer", E("billy joel")),
    ]),
    # -------------------------------------------------------------- sports
    ("lebron james", [
        ("team", E("los angeles lakers")),
        ("position", L("forward")),
        ("awards", L("four NBA championships and four MVP awards")),
        ("childrenNum", L("three")),
        ("spouse", L("Savannah James")),
    ]),
    ("michael jordan", [
        ("team", E("chicago bulls")),
        ("position", L("shooting guard")),
        ("awards", L("six NBA championships, with six Finals MVPs")),
    ]),
    ("serena williams", [
        ("participant", L("four Olympic Games")),
        ("awards", L("23 Grand Slam singles titles")),
        ("spouse", L("Alexis Ohanian")),
        ("childrenNum", L("two")),
    ]),
    ("tom brady", [
        ("team", L("the Patriots, and later the Buccaneers")),
        ("position", L("quarterback")),
        ("awards", L("seven Super Bowl rings, more than any single franchise")),
    ]),
    ("lionel messi", [
        ("team", L("Inter Miami")),
        ("position", L("forward")),
        ("awards", L("eight Ballon d'Or trophies and the 2022 World Cup")),
    ]),
    ("usain bolt", [
        ("participant", L("three Olympic Games")),
        ("awards", L("eight Olympic gold medals")),
    ]),
    ("michael phelps", [
        ("participant", L("five Olympic Games")),
        ("awards", L("23 Olympic golds, the most in history")),
    ]),
    ("simone biles", [
        ("participant", L("three Olympic Games")),
        ("awards", L("seven Olympic medals and thirty World Championship medals")),
    ]),
    ("roger federer", [
        ("participant", L("every Wimbledon from 1999 to 2021")),
        ("awards", L("twenty Grand Slam singles titles")),
    ]),
    ("los angeles lakers", [
        ("awards", L("seventeen NBA championships")),
        ("participant", L("the NBA Finals 32 times")),
    ]),
    ("chicago bulls", [
        ("awards", L("six NBA championships, all in the 1990s")),
        ("participant", L("the NBA playoffs 36 times")),
    ]),
    ("new york yankees", [
        ("awards", L("27 World Series titles, the most in baseball")),
        ("participant", L("the World Series forty times")),
    ]),
]


def main() -> None:
    rows = []
    for subject, facts in TRIPLES:
        sid = eid(subject)
        for relation, (obj, kind) in facts:
            rows.append(
                {"subject": sid, "relation": relation, "object": obj, "object_kind": kind}
            )
    write_jsonl(OUT, rows)
    store = load_kg(OUT, GAZ)
    print(f"wrote {len(store)} triples for {len(store.subjects())} subjects -> {OUT}")


if __name__ == "__main__":
    main()
