"""Regenerate the bundled fun-fact corpus.

Facts are short, single-sentence trivia keyed by entity ids and plain
concept words; the centering generator intersects those keys with
whatever the conversation has surfaced.  Keeping the master copy here
gives each fact a stable sequential id and routes the output through
the validating loader before it replaces the old file.

Run from the repository root:

    python3 scripts/build_facts.py
"""

from __future__ import annotations

import sys
from pathlib import Path

SRC = Path(__file__).resolve().parent.parent / "src"
sys.path.insert(0, str(SRC))

from parley.dataio import write_jsonl  # noqa: E402
from parley.facts import load_fact_index  # noqa: E402
from parley.types import TOPIC_SET  # noqa: E402

OUT = SRC / "parley" / "data" / "facts" / "facts.jsonl"

# (topic, keys, text)
FACTS: list[tuple[str, list[str], str]] = [
    ("animals", ["hedgehog", "hedgehogs"],
     "Hedgehogs are thought to be one of the oldest mammals on earth!"),
    ("animals", ["hedgehog", "hedgehogs"],
     "A baby hedgehog is called a hoglet, and a group of hedgehogs is called an array."),
    ("animals", ["spider", "spiders"],
     "Some spiders disguise themselves as ants by pretending their two front legs are antennae."),
    ("animals", ["octopus", "octopuses"],
     "Octopuses have three hearts, and two of them stop beating whenever they swim."),
    ("animals", ["otter", "otters", "sea otters"],
     "Sea otters hold hands while they sleep so they don't drift apart."),
    ("animals", ["flamingo", "flamingos"],
     "A group of flamingos is called a flamboyance."),
    ("animals", ["cow", "cows"],
     "Cows have best friends, and they get stressed when they're separated."),
    ("animals", ["elephant", "elephants"],
     "Elephants are among the few animals that can recognize themselves in a mirror."),
    ("animals", ["cheetah", "cheetahs"],
     "Cheetahs can't roar. They chirp, a bit like birds."),
    ("animals", ["tiger", "tigers", "white tiger"],
     "A tiger's stripes are printed on its skin, not just its fur."),

    ("sports", ["olympics", "gold medal"],
     "Olympic gold medals are mostly silver, with about six grams of actual gold."),
    ("sports", ["basketball"],
     "Basketball was invented in 1891, using peach baskets as the first hoops."),
    ("sports", ["soccer", "football"],
     "The classic soccer ball has 32 panels, stitched into pentagons and hexagons."),
    ("sports", ["golf"],
     "Golf is the only sport that has been played on the moon."),
    ("sports", ["cycling", "tour de france"],
     "The Tour de France covers more than two thousand miles in three weeks."),
    ("sports", ["Q90001488", "michael jordan"],
     "Michael Jordan was left off his high school varsity roster as a sophomore, then went on to win six championships."),
    ("sports", ["Q90001557", "serena williams"],
     "Serena Williams won the 2017 Australian Open while she was pregnant."),
    ("sports", ["Q90001716", "yankees", "new york yankees"],
     "The Yankees have worn their pinstripes since 1912."),

    ("movies", ["movie", "movies", "film"],
     "The first films ever made lasted only a couple of seconds each."),
    ("movies", ["movie", "movies", "scream"],
     "The same stock scream, the Wilhelm scream, has appeared in over four hundred movies."),
    ("movies", ["Q90000029", "toy story"],
     "Toy Story was the first feature film made entirely with computer animation."),
    ("movies", ["Q90000004", "the dark knight"],
     "The Dark Knight was the first comic book movie to earn a billion dollars."),
    ("movies", ["Q90000090", "parasite"],
     "Parasite was the first film not in English to win the Best Picture Oscar."),
    ("movies", ["Q90000390", "tom hanks"],
     "Tom Hanks's brother Jim often voices Woody in the Toy Story video games."),
    ("movies", ["popcorn", "theater", "cinema"],
     "Movie theater popcorn can cost more per ounce than filet mignon."),

    ("books", ["book", "books"],
     "The smell of old books has a name, bibliosmia, and it comes from the paper slowly breaking down."),
    ("books", ["reading"],
     "Theodore Roosevelt got through roughly a book a day."),
    ("books", ["novel", "novels"],
     "The longest novel ever published runs to more than nine thousand pages."),
    ("books", ["agatha christie"],
     "Agatha Christie is the best-selling novelist of all time, with around two billion copies sold."),
    ("books", ["printing", "press"],
     "The first major book printed on a press was a Latin Bible, back in the 1450s."),
    ("books", ["iceland"],
     "Iceland publishes more books per person than any other country."),

    ("nature", ["oak", "tree", "trees", "acorn", "acorns"],
     "A single oak tree can drop ten thousand acorns in one autumn."),
    ("nature", ["rainbow", "rainbows"],
     "Rainbows are full circles. From the ground we usually only see the top half."),
    ("nature", ["bamboo", "plants"],
     "Some bamboo species grow three feet in a single day."),
    ("nature", ["lightning", "weather"],
     "Lightning strikes the earth about eight million times a day."),
    ("nature", ["amazon", "rainforest", "forest"],
     "The Amazon rainforest produces a big share of the oxygen we breathe."),
    ("nature", ["mountain", "mountains", "everest"],
     "Mountains keep growing. Everest gets about four millimeters taller every year."),
    ("nature", ["sunflower", "sunflowers", "flowers"],
     "Young sunflowers track the sun across the sky, then settle facing east for good."),

    ("news", ["news"],
     "People like to claim 'news' stands for the compass points, but it really just means new things."),
    ("news", ["newspaper", "newspapers"],
     "The first newspaper ad in America ran in 1704, selling a house on Long Island."),
    ("news", ["media", "radio"],
     "Radio took 38 years to reach fifty million listeners. Television did it in thirteen."),
    ("news", ["newspaper", "coffee"],
     "Newspapers used to be read aloud in coffee houses for people who couldn't afford a copy."),
    ("news", ["headline", "headlines"],
     "The word headline comes from the line of type at the head of a newspaper column."),
    ("news", ["newspaper", "japan"],
     "Japan's Yomiuri Shimbun has the largest newspaper circulation in the world."),

    ("astronomy", ["venus", "planets"],
     "A day on Venus lasts longer than its entire year."),
    ("astronomy", ["stars", "neutron star"],
     "Some neutron stars spin six hundred times every second."),
    ("astronomy", ["stars", "milky way"],
     "There are more trees on Earth than stars in the Milky Way."),
    ("astronomy", ["mars", "sunset"],
     "Sunsets on Mars are blue."),
    ("astronomy", ["saturn", "planets"],
     "Saturn is so light it would float, if you could find a big enough bathtub."),
    ("astronomy", ["moon"],
     "The footprints on the moon will last millions of years. There's no wind to erase them."),
    ("astronomy", ["jupiter", "storm"],
     "Jupiter's Great Red Spot is a storm that has raged for at least 190 years."),

    ("comic_books", ["superman", "comics"],
     "In his first comics, Superman couldn't fly. He could only leap an eighth of a mile."),
    ("comic_books", ["marvel", "dc", "superhero"],
     "Marvel and DC jointly own a trademark on the word superhero."),
    ("comic_books", ["wonder woman"],
     "Wonder Woman's creator also helped invent an early lie detector."),
    ("comic_books", ["action comics", "comics"],
     "A copy of Action Comics number one sold for over three million dollars."),
    ("comic_books", ["stan lee", "marvel"],
     "Stan Lee made a cameo in nearly every Marvel movie until 2019."),
    ("comic_books", ["batman", "comics"],
     "Batman first appeared in Detective Comics in 1939, a year after Superman."),

    ("dinosaurs", ["t rex", "tyrannosaurus", "dinosaur", "dinosaurs"],
     "The T. rex lived closer in time to us than to the Stegosaurus."),
    ("dinosaurs", ["feathers", "dinosaur", "dinosaurs"],
     "Plenty of dinosaurs had feathers, including some relatives of T. rex."),
    ("dinosaurs", ["argentinosaurus", "dinosaurs"],
     "Argentinosaurus, the longest dinosaur, stretched further than three school buses."),
    ("dinosaurs", ["birds", "velociraptor", "dinosaurs"],
     "Birds are living dinosaurs. A chicken is closer kin to a velociraptor than a crocodile is."),
    ("dinosaurs", ["sauropod", "dinosaurs"],
     "Some giant sauropods swallowed stones to help grind food in their stomachs."),
    ("dinosaurs", ["dinosaur", "dinosaurs"],
     "Dinosaur means terrible lizard, but dinosaurs weren't lizards at all."),

    ("harry_potter", ["harry potter", "rowling"],
     "The first Harry Potter book was largely written in cafes in Edinburgh."),
    ("harry_potter", ["hogwarts", "harry potter"],
     "The Hogwarts motto translates to: never tickle a sleeping dragon."),
    ("harry_potter", ["dementors", "harry potter"],
     "The dementors were inspired by the author's own experience of depression."),
    ("harry_potter", ["harry potter"],
     "The first Harry Potter print run was just five hundred copies."),
    ("harry_potter", ["hagrid", "harry potter"],
     "Hagrid's flying motorcycle is the first magical object mentioned in the whole series."),
    ("harry_potter", ["quidditch", "harry potter"],
     "Quidditch has been adapted into a real sport played at hundreds of universities."),

    ("nutrition", ["honey"],
     "Honey never spoils. Sealed jars from ancient tombs were still edible."),
    ("nutrition", ["banana", "bananas", "strawberries"],
     "Bananas count as berries, but strawberries don't."),
    ("nutrition", ["carrot", "carrots"],
     "Carrots were mostly purple until Dutch growers bred orange ones in the 1600s."),
    ("nutrition", ["broccoli"],
     "Calorie for calorie, broccoli packs more protein than steak."),
    ("nutrition", ["sweet potato", "sweet potatoes"],
     "Sweet potatoes are loaded with beta carotene, which your body turns into vitamin A."),
    ("nutrition", ["cucumber", "cucumbers"],
     "A cucumber is about 96 percent water."),
    ("nutrition", ["apple", "apples"],
     "Apples float because a quarter of their volume is air."),

    ("pirates", ["eye patch", "pirates"],
     "Pirates wore eye patches partly to keep one eye adjusted to the dark below decks."),
    ("pirates", ["flag", "jolly roger", "pirates"],
     "The skull and crossbones flag was called the Jolly Roger."),
    ("pirates", ["blackbeard", "pirates"],
     "Blackbeard tied slow-burning fuses into his beard before battle."),
    ("pirates", ["captain", "pirates"],
     "Many pirate crews elected their captains, and could vote them out again."),
    ("pirates", ["ching shih", "pirates"],
     "One of history's most powerful pirates was Ching Shih, who commanded tens of thousands of sailors."),
    ("pirates", ["plank", "pirates"],
     "Walking the plank is mostly a myth. Marooning was the real punishment."),

    ("video_games", ["mario", "jumpman", "Q90002196"],
     "Mario was originally called Jumpman, and he was a carpenter, not a plumber."),
    ("video_games", ["minecraft", "Q90002113"],
     "Minecraft is the best-selling video game of all time."),
    ("video_games", ["tetris", "Q90002229"],
     "Tetris was written by a Soviet software engineer in 1984."),
    ("video_games", ["zelda", "the legend of zelda"],
     "The Legend of Zelda was one of the first console games that let you save your progress."),
    ("video_games", ["pac man", "pacman", "Q90002230"],
     "Pac-Man's shape came from a pizza with a slice missing."),
    ("video_games", ["arcade", "video games"],
     "At their peak, arcade machines collected more quarters per year than many blockbusters grossed."),

    ("board_games", ["monopoly", "Q90002045"],
     "Monopoly began as The Landlord's Game, designed to criticize monopolies, not celebrate them."),
    ("board_games", ["chess", "Q90002047"],
     "There are more possible chess games than atoms in the observable universe."),
    ("board_games", ["snakes and ladders"],
     "Snakes and Ladders started in India as a lesson about virtue and vice."),
    ("board_games", ["scrabble", "Q90002046"],
     "Scrabble's inventor worked out letter frequencies by counting the front page of the New York Times."),
    ("board_games", ["candy land"],
     "Candy Land was designed in a polio ward to entertain recovering children."),
    ("board_games", ["dice"],
     "Dice are among the oldest gaming tools we know of, going back thousands of years."),

    ("tv", ["Q79784", "friends"],
     "The famous orange couch in Friends was found in a studio prop house."),
    ("tv", ["Q90000664", "the office"],
     "Some of the most quoted lines in The Office were improvised by the cast."),
    ("tv", ["Q90000666", "breaking bad"],
     "Breaking Bad was pitched as turning Mr. Chips into Scarface."),
    ("tv", ["Q90000667", "game of thrones"],
     "Game of Thrones fleshed out Dothraki so thoroughly that you can actually learn the language."),
    ("tv", ["remote", "television"],
     "The first TV remote was called the Lazy Bones, and it was attached by a cable."),
    ("tv", ["television", "sitcom"],
     "Live studio audiences date back to radio, where shows wanted real laughter."),

    ("food", ["cheese"],
     "Cheese is the most stolen food in the world."),
    ("food", ["peanut", "peanuts"],
     "Peanuts aren't nuts. They're legumes that grow underground."),
    ("food", ["fork", "cutlery"],
     "The fork was condemned as scandalous when it first reached Venice."),
    ("food", ["chocolate"],
     "The Aztecs used chocolate as currency."),
    ("food", ["pineapple", "pineapples"],
     "A pineapple takes about two years to grow."),
    ("food", ["ketchup"],
     "Ketchup was sold as medicine in the 1830s."),
    ("food", ["sweet potato", "yam", "yams"],
     "Sweet potatoes and yams are completely different plants."),

    ("hobbies", ["collection", "rubber ducks", "collecting"],
     "The world's largest rubber duck collection holds more than nine thousand of them."),
    ("hobbies", ["knitting"],
     "Knitting began as a male-only trade guild in medieval Europe."),
    ("hobbies", ["puzzle", "puzzles", "jigsaw"],
     "Jigsaw puzzles began as geography lessons: maps glued to wood and cut apart."),
    ("hobbies", ["origami"],
     "Origami masters have folded paper cranes smaller than a grain of rice."),
    ("hobbies", ["hiking"],
     "Hiking a mile burns about the same calories as running one, just more slowly."),
    ("hobbies", ["birdwatching", "birding"],
     "The birdwatching 'big year' world record stands at over six thousand species."),
    ("hobbies", ["gardening", "marigolds"],
     "Gardeners plant marigolds beside tomatoes to keep pests away naturally."),

    ("music", ["Q1299", "the beatles", "beatles"],
     "The Beatles used the word love more than six hundred times across their songs."),
    ("music", ["piano"],
     "A piano hides around 230 strings under about twenty tons of tension."),
    ("music", ["music", "tempo", "heartbeat"],
     "Your heartbeat shifts toward the tempo of the music you're listening to."),
    ("music", ["concert", "organ"],
     "The world's longest concert is scheduled to run 639 years, on a church organ in Germany."),
    ("music", ["Q90001321", "Q90000876", "queen", "bohemian rhapsody"],
     "Bohemian Rhapsody has no chorus, yet it topped the charts twice, decades apart."),
    ("music", ["Q90001152", "taylor swift"],
     "Taylor Swift was the first artist to win the Album of the Year Grammy four times."),
    ("music", ["flute", "instrument", "instruments"],
     "The oldest known musical instrument is a bird-bone flute over forty thousand years old."),
]


def main() -> None:
    topics = {t for t, _, _ in FACTS}
    missing = TOPIC_SET - topics
    if missing:
        raise SystemExit(f"topics without facts: {sorted(missing)}")
    rows = [
        {"fact_id": i, "topic": topic, "keys": keys, "text": text}
        for i, (topic, keys, text) in enumerate(FACTS)
    ]
    write_jsonl(OUT, rows)
    index = load_fact_index(OUT)
    print(f"wrote {len(index)} facts across {len(topics)} topics -> {OUT}")


if __name__ == "__main__":
    main()
