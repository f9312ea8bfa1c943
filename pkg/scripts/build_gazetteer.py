#!/usr/bin/env python3
"""Regenerate src/parley/data/gazetteer/gazetteer.jsonl.

Curated desk-scale entity inventory (~2k records over the 13 types).
Names are real; ids are synthetic (Q9xxxxxxx) except for a handful of
anchor entities whose knowledge-base ids the test fixtures rely on.
Popularity is a deterministic rank-based figure, with explicit pins
where relative order matters (same-name disambiguation pairs).

Run from the repo root:  python scripts/build_gazetteer.py
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from parley.filters import contains_profanity  # noqa: E402
from parley.types import TYPE_TO_TOPIC, normalize_surface  # noqa: E402

OUT = ROOT / "src" / "parley" / "data" / "gazetteer" / "gazetteer.jsonl"

BASE_POP = 120_000
SYNTH_ID_START = 90_000_001

# An entry is a name, or (name, overrides) with optional keys
# id / alts / pop.
MOVIES = [
    ("Titanic", {"pop": 160_000}),
    "The Shawshank Redemption", "The Godfather", "The Dark Knight",
    "Pulp Fiction", "Forrest Gump", "Inception", "Fight Club", "The Matrix",
    "Goodfellas", "Interstellar", "The Silence of the Lambs",
    "Saving Private Ryan", "The Green Mile", "Gladiator",
    ("Star Wars", {"alts": ["Star Wars A New Hope"]}),
    "The Empire Strikes Back", "Return of the Jedi", "The Force Awakens",
    "Jurassic Park", "Jurassic World", "Avatar", "Avengers Endgame",
    "The Avengers", "Iron Man", "Black Panther",
    ("Spider-Man", {"pop": 120_000}),
    "Spider-Man Into the Spider-Verse", "Toy Story", "Toy Story 3",
    "Finding Nemo", "Finding Dory", "The Lion King", "Frozen", "Frozen II",
    "Moana", "Up", "Inside Out", "Coco", "Ratatouille", "WALL-E",
    "Monsters Inc", "Monsters University", "Shrek", "Kung Fu Panda",
    "Back to the Future", "E.T. the Extra-Terrestrial", "Jaws",
    "Raiders of the Lost Ark", "The Terminator", "Terminator 2 Judgment Day",
    "Alien", "Aliens", "Blade Runner", "Blade Runner 2049",
    "Mad Max Fury Road", "The Princess Bride", "Ghostbusters",
    "The Breakfast Club", "Ferris Buellers Day Off", "Home Alone",
    "Groundhog Day", "Mrs Doubtfire", "The Truman Show", "Good Will Hunting",
    "Dead Poets Society", "A Beautiful Mind", "The Pursuit of Happyness",
    "Slumdog Millionaire", "The Social Network", "La La Land", "Whiplash",
    "Birdman", "The Grand Budapest Hotel", "Moonrise Kingdom",
    ("Fantastic Mr Fox", {"pop": 8_000}),
    "Isle of Dogs", "The Royal Tenenbaums", "No Country for Old Men",
    "There Will Be Blood", "The Big Lebowski",
    ("Fargo", {"pop": 30_000}),
    "O Brother Where Art Thou", "True Grit", "Django Unchained",
    "Kill Bill", "Reservoir Dogs", "Once Upon a Time in Hollywood",
    "The Hateful Eight", "Parasite", "Oldboy", "Spirited Away",
    "My Neighbor Totoro", "Princess Mononoke", "Howls Moving Castle",
    "Your Name", "Akira", "Casablanca", "Citizen Kane",
    "Gone with the Wind", "The Wizard of Oz", "Singin in the Rain",
    "Psycho", "Vertigo", "Rear Window", "North by Northwest", "The Birds",
    "12 Angry Men", "Its a Wonderful Life", "Sunset Boulevard",
    "Some Like It Hot", "Roman Holiday", "Breakfast at Tiffanys",
    "Lawrence of Arabia", "2001 A Space Odyssey", "A Clockwork Orange",
    ("The Shining", {"pop": 40_000}),
    "Full Metal Jacket", "Dr Strangelove", "Apocalypse Now",
    "The Deer Hunter", "Taxi Driver", "Raging Bull", "Rocky", "Creed",
    "The Karate Kid", "Top Gun", "Top Gun Maverick", "Mission Impossible",
    "Edge of Tomorrow", "Minority Report", "War of the Worlds",
    "Catch Me If You Can", "The Departed", "Shutter Island",
    "The Wolf of Wall Street", "Gangs of New York", "The Aviator",
    "Braveheart", "Apollo 13", "Cast Away",
    ("The Da Vinci Code", {"pop": 26_000}),
    "A Few Good Men", "Jerry Maguire", "Rain Man", "Dances with Wolves",
    "Unforgiven", "Million Dollar Baby", "Mystic River", "Gran Torino",
    "American Sniper", "Schindlers List", "Lincoln", "King Kong",
    "Godzilla", "Pacific Rim", "Cloverfield", "District 9", "Arrival",
    "Sicario", "Prisoners",
    ("Dune", {"pop": 80_000}),
    "Gravity",
    ("The Martian", {"pop": 48_000}),
    "Ad Astra", "First Man", "Hidden Figures", "The Imitation Game",
    "The Theory of Everything",
    ("Bohemian Rhapsody", {"pop": 34_000}),
    "Rocketman", "A Star Is Born", "Les Miserables", "The Greatest Showman",
    ("Chicago", {"pop": 40_000}),
    "Mamma Mia", "Grease", "Dirty Dancing", "Footloose", "Pretty Woman",
    "Notting Hill", "Love Actually", "The Notebook", "A Walk to Remember",
    "500 Days of Summer", "Crazy Rich Asians", "The Proposal",
    "10 Things I Hate About You", "Clueless", "Mean Girls",
    "Legally Blonde", "The Devil Wears Prada", "Bridesmaids", "Superbad",
    "Step Brothers", "Anchorman", "Talladega Nights", "Elf",
    "A Christmas Story", "Die Hard", "Lethal Weapon", "Speed",
    "The Fugitive", "Heat", "Point Break", "The Bourne Identity",
    "The Bourne Supremacy", "Casino Royale",
    ("Skyfall", {"pop": 42_000}),
    "Goldfinger", "GoldenEye", "No Time to Die", "John Wick", "Taken",
    "Snatch", "Trainspotting", "28 Days Later", "Shaun of the Dead",
    "Hot Fuzz", "The Worlds End", "Zombieland", "World War Z",
    "I Am Legend", "The Road", "The Book of Eli", "Children of Men",
    "V for Vendetta", "Watchmen", "Logan", "Deadpool", "X-Men",
    "Guardians of the Galaxy", "Thor Ragnarok", "Doctor Strange",
    "Captain America The Winter Soldier", "Ant-Man", "Wonder Woman",
    "Man of Steel", "Batman Begins", "The Dark Knight Rises", "Joker",
    "The Batman", "Superman", "Aquaman", "Shazam", "The Incredibles",
    "Incredibles 2", "Big Hero 6", "Zootopia", "Tangled", "Encanto",
    "Turning Red", "Luca", "Soul", "Onward", "Brave", "Cars",
    "A Bugs Life", "How to Train Your Dragon", "Despicable Me", "Minions",
    "The Secret Life of Pets", "Sing", "Madagascar", "Ice Age", "Rio",
    "Happy Feet", "Hotel Transylvania", "The Lego Movie", "Wreck-It Ralph",
    "Ralph Breaks the Internet", "Aladdin", "Beauty and the Beast",
    "Mulan", "Pocahontas", "The Little Mermaid",
    "Snow White and the Seven Dwarfs", "Cinderella", "Sleeping Beauty",
    "Peter Pan", "Dumbo", "Bambi", "Pinocchio", "Fantasia",
    "The Jungle Book", "101 Dalmatians", "Lady and the Tramp",
    "The Aristocats", "Robin Hood", "The Fox and the Hound", "Hercules",
    "Tarzan", "Lilo and Stitch", "The Emperors New Groove",
    "Atlantis The Lost Empire", "Treasure Planet", "Bolt",
    "The Princess and the Frog", "Raya and the Last Dragon",
    ("Pirates of the Caribbean", {"alts": ["The Curse of the Black Pearl"]}),
    "National Treasure", "The Mummy", "Tomb Raider",
    ("Uncharted", {"pop": 6_000}),
    ("Sonic the Hedgehog", {"pop": 14_000}),
    "Detective Pikachu", "Jumanji", "Night at the Museum",
    ("The Chronicles of Narnia", {"pop": 22_000}),
    ("Harry Potter and the Sorcerers Stone", {"pop": 120_000}),
    "Harry Potter and the Chamber of Secrets",
    "Harry Potter and the Prisoner of Azkaban",
    "Harry Potter and the Goblet of Fire",
    "Fantastic Beasts and Where to Find Them",
    ("The Hunger Games", {"pop": 60_000}),
    ("Catching Fire", {"pop": 28_000}),
    ("Divergent", {"pop": 18_000}),
    ("The Maze Runner", {"pop": 16_000}),
    ("Twilight", {"pop": 44_000}),
    ("The Fault in Our Stars", {"pop": 15_000}),
    ("Enders Game", {"pop": 7_000}),
    ("Ready Player One", {"pop": 24_000}),
    "Free Guy",
    ("The Hitchhikers Guide to the Galaxy", {"pop": 9_000}),
    "Men in Black", "Independence Day", "Armageddon", "Deep Impact",
    ("Twister", {"pop": 11_000}),
    "The Day After Tomorrow", "San Andreas",
    ("The Hobbit", {"pop": 52_000, "alts": ["The Hobbit An Unexpected Journey"]}),
    ("The Fellowship of the Ring", {"alts": ["The Lord of the Rings The Fellowship of the Ring"]}),
    "The Return of the King",
    ("Let It Be", {"pop": 9_000}),
    ("Life of Pi", {"pop": 17_000}),
    ("The Book Thief", {"pop": 7_500}),
    ("Battleship", {"pop": 5_000}),
    "Napoleon Dynamite", "The Sandlot", "The Goonies", "Stand by Me",
    "The Sixth Sense", "Signs", "Unbreakable", "Split", "Get Out", "Us",
    "Nope", "A Quiet Place", "Bird Box", "The Conjuring", "Insidious",
    "Halloween", "Scream", "The Exorcist", "The Omen", "Poltergeist",
    "Gremlins", "Beetlejuice", "The Nightmare Before Christmas",
    "Edward Scissorhands", "Corpse Bride", "Coraline", "ParaNorman",
    "Kubo and the Two Strings", "The Iron Giant", "Megamind",
    "Cloudy with a Chance of Meatballs", "The Croods", "Trolls",
    "Kung Fu Panda 2", "Puss in Boots", "Rango", "Ferdinand",
    "The Secret of NIMH", "An American Tail", "The Land Before Time",
    "Balto", "Spirit Stallion of the Cimarron", "The Prince of Egypt",
    "Anastasia", "Rudolph the Red-Nosed Reindeer", "The Polar Express",
    "Arthur Christmas", "Klaus", "Rise of the Guardians",
]

TV_SHOWS = [
    ("Friends", {"id": "Q79784", "pop": 180_000}),
    ("The Office", {"alts": ["The Office US"], "pop": 150_000}),
    ("The Office", {"alts": ["The Office UK"], "pop": 12_000}),
    "Breaking Bad", "Game of Thrones", "Stranger Things", "The Simpsons",
    "Seinfeld", "The Sopranos", "The Wire", "Mad Men", "Better Call Saul",
    "Parks and Recreation", "Brooklyn Nine-Nine", "How I Met Your Mother",
    "The Big Bang Theory", "Modern Family", "Arrested Development",
    "Community", "Scrubs", "House", "Greys Anatomy", "ER",
    "The Good Place", "30 Rock", "New Girl", "Gilmore Girls", "The Crown",
    "Downton Abbey", "Sherlock", "Doctor Who", "Black Mirror", "Westworld",
    "Lost", "Prison Break", "24", "Homeland", "Dexter", "True Detective",
    ("Fargo", {"pop": 14_000, "alts": ["Fargo the series"]}),
    "Mindhunter", "Narcos", "Money Heist", "Squid Game", "Dark",
    ("The Witcher", {"pop": 36_000}),
    "The Mandalorian", "Andor", "The Boys", "Invincible", "Rick and Morty",
    "BoJack Horseman", "Family Guy", "South Park", "Futurama",
    "King of the Hill", "Bobs Burgers", "Archer",
    "Avatar The Last Airbender", "The Legend of Korra", "Gravity Falls",
    "Adventure Time", "Regular Show", "SpongeBob SquarePants",
    "Phineas and Ferb", "Teen Titans",
    ("Pokemon", {"pop": 64_000}),
    "Dragon Ball Z", "Naruto", "One Piece", "Attack on Titan",
    "Death Note", "My Hero Academia", "Demon Slayer",
    "Fullmetal Alchemist", "Cowboy Bebop", "Neon Genesis Evangelion",
    "Sailor Moon", "The X-Files", "Twin Peaks",
    "Buffy the Vampire Slayer", "Charmed", "Supernatural",
    "The Vampire Diaries", "Pretty Little Liars", "Gossip Girl",
    "Riverdale", "13 Reasons Why", "Euphoria", "Succession", "Ted Lasso",
    "The Morning Show", "Severance",
    ("The Last of Us", {"pop": 38_000, "alts": ["The Last of Us the series"]}),
    "House of the Dragon", "The Rings of Power", "Wednesday", "You",
    "Ozark", "Peaky Blinders", "The Umbrella Academy", "Lucifer",
    "Sons of Anarchy", "Justified", "Deadwood", "Band of Brothers",
    "Chernobyl", "The Pacific", "Rome",
    ("Vikings", {"pop": 26_000}),
    "The Last Kingdom", "Outlander", "Bridgerton", "Emily in Paris",
    "The Queens Gambit", "Broadchurch", "Luther", "Line of Duty",
    "Killing Eve", "Fleabag", "Derry Girls", "The IT Crowd", "Blackadder",
    "Fawlty Towers", "Monty Pythons Flying Circus", "Mr Bean", "Top Gear",
    "Planet Earth", "Blue Planet", "Cosmos", "MythBusters",
    ("Survivor", {"pop": 45_000}),
    "The Amazing Race", "American Idol", "The Voice", "Jeopardy",
    "Wheel of Fortune", "Saturday Night Live", "Law and Order", "NCIS",
    "Criminal Minds", "Bones", "Castle", "Monk", "Psych", "White Collar",
    "Suits", "The Mentalist", "Elementary", "Person of Interest",
    "The Blacklist", "This Is Us", "Parenthood", "Friday Night Lights",
    "One Tree Hill", "The OC", "Dawsons Creek", "Smallville", "Hannibal",
    "Slow Horses", "Arrow",
    "The Flash", "Gotham", "Daredevil", "Jessica Jones", "Luke Cage",
    "The Punisher", "Agents of SHIELD", "WandaVision", "Loki", "Hawkeye",
    "Frasier", "Cheers", "MASH", "Everybody Loves Raymond",
    "The King of Queens", "Malcolm in the Middle", "That 70s Show",
    "The Fresh Prince of Bel-Air", "Full House", "Boy Meets World",
    "Saved by the Bell", "Happy Days", "I Love Lucy", "The Twilight Zone",
    "The Andy Griffith Show", "Columbo", "Star Trek",
    "Star Trek The Next Generation", "Battlestar Galactica", "Firefly",
    "The Expanse", "Love Death and Robots", "The Handmaids Tale",
    "Orange Is the New Black", "House of Cards",
    "The Haunting of Hill House", "American Horror Story",
    "The Walking Dead", "Schitts Creek", "Good Omens", "Big Little Lies",
    "Only Murders in the Building", "Abbott Elementary", "Atlanta",
    "Barry", "Curb Your Enthusiasm", "Veep", "Silicon Valley",
    "The Marvelous Mrs Maisel", "Grace and Frankie", "Dead to Me",
    "Never Have I Ever",
]

SONGS = [
    ("Bohemian Rhapsody", {"pop": 110_000}),
    "Stairway to Heaven", "Hotel California", "Imagine", "Hey Jude",
    ("Let It Be", {"pop": 64_000}),
    "Yesterday", "Come Together", "Here Comes the Sun", "Twist and Shout",
    ("Piano Man", {"pop": 52_000}),
    "Uptown Girl", "We Didnt Start the Fire", "Billie Jean", "Thriller",
    "Beat It", "Smooth Criminal", "Man in the Mirror",
    "Like a Rolling Stone", "Blowin in the Wind", "Purple Haze",
    "All Along the Watchtower", "Smells Like Teen Spirit",
    "Come as You Are", "Lithium", "Black Hole Sun", "Creep",
    "Karma Police", "Paranoid Android", "No Surprises", "Wonderwall",
    "Dont Look Back in Anger", "Champagne Supernova",
    "Bitter Sweet Symphony", "Losing My Religion", "Everybody Hurts",
    "Sweet Child O Mine", "November Rain", "Paradise City",
    "Welcome to the Jungle", "Livin on a Prayer", "Its My Life",
    "Dont Stop Believin", "Eye of the Tiger", "We Are the Champions",
    "We Will Rock You", "Another One Bites the Dust", "Under Pressure",
    "Radio Ga Ga", "Somebody to Love", "Dont Stop Me Now", "Killer Queen",
    "Crazy Little Thing Called Love", "I Want to Break Free", "Take on Me",
    "Africa", "Rosanna", "Hold the Line", "Mr Blue Sky",
    "Dont Bring Me Down", "Sweet Home Alabama", "Free Bird", "Simple Man",
    "More Than a Feeling", "Carry On Wayward Son", "Dust in the Wind",
    "Baba ORiley", "Wont Get Fooled Again", "Pinball Wizard",
    "My Generation", "Paint It Black", "Gimme Shelter",
    "Sympathy for the Devil", "Angie", "Wild Horses", "Start Me Up",
    "Light My Fire", "Riders on the Storm", "Break On Through",
    "Heart of Glass", "Call Me", "One Way or Another", "Dancing Queen",
    ("Mamma Mia", {"pop": 30_000}),
    "Waterloo", "Take a Chance on Me", "SOS", "Fernando",
    "Money Money Money", "Super Trouper", "The Winner Takes It All",
    "Knowing Me Knowing You", "I Will Survive", "Stayin Alive",
    "Night Fever", "How Deep Is Your Love", "Le Freak", "September",
    "Boogie Wonderland", "Celebration", "Superstition",
    "Signed Sealed Delivered", "Isnt She Lovely",
    "I Just Called to Say I Love You", "Whats Going On",
    "Aint No Mountain High Enough", "My Girl",
    "I Heard It Through the Grapevine", "Respect", "Think",
    "A Natural Woman", "Chain of Fools", "I Say a Little Prayer",
    "At Last", "Feeling Good", "What a Wonderful World",
    "Dream a Little Dream of Me", "Fly Me to the Moon", "My Way",
    "New York New York", "Cant Help Falling in Love", "Jailhouse Rock",
    "Hound Dog", "Suspicious Minds", "Blue Suede Shoes", "Ring of Fire",
    "I Walk the Line", "Folsom Prison Blues", "Hurt", "Jolene", "9 to 5",
    "I Will Always Love You", "Islands in the Stream", "The Gambler",
    "Take Me Home Country Roads", "Rocket Man", "Tiny Dancer",
    "Your Song", "Bennie and the Jets", "Goodbye Yellow Brick Road",
    "Crocodile Rock", "Candle in the Wind", "Im Still Standing",
    "Dont Go Breaking My Heart", "Blinding Lights", "Shape of You",
    "Rolling in the Deep", "Someone Like You",
    ("Hello", {"pop": 46_000}),
    "Set Fire to the Rain",
    ("Skyfall", {"pop": 13_000, "alts": ["Skyfall the song"]}),
    "Umbrella",
    ("Halo", {"pop": 24_000}),
    "Single Ladies", "Crazy in Love", "Irreplaceable", "Royals", "Team",
    "Bad Guy", "Happier Than Ever", "Ocean Eyes", "Lovely", "Shallow",
    "Poker Face", "Bad Romance", "Born This Way", "Telephone",
    ("Just Dance", {"pop": 19_000}),
    "Firework", "Roar", "Dark Horse", "Teenage Dream", "Hot N Cold",
    "Shake It Off", "Blank Space", "Love Story", "You Belong with Me",
    "Anti-Hero", "Cardigan", "Willow", "Style", "Wildest Dreams",
    "Delicate", "Cruel Summer", "Uptown Funk", "24K Magic",
    "Locked Out of Heaven", "Just the Way You Are", "Grenade",
    "When I Was Your Man", "Treasure", "Happy", "Get Lucky",
    "One More Time", "Harder Better Faster Stronger", "Around the World",
    "Hey Ya", "Seven Nation Army", "Feel Good Inc",
    ("Clint Eastwood", {"pop": 18_000, "alts": ["Clint Eastwood the song"]}),
    "Viva la Vida", "Yellow", "Fix You", "The Scientist", "Clocks",
    ("Paradise", {"pop": 12_000}),
    "A Sky Full of Stars", "Radioactive", "Demons", "Believer", "Thunder",
    "Whatever It Takes", "Counting Stars", "Apologize", "Pompeii",
    "Ho Hey", "Riptide", "Budapest", "Take Me to Church", "Cheap Thrills",
    "Chandelier", "Elastic Heart", "Titanium", "Wrecking Ball",
    "Party in the USA", "The Climb", "See You Again", "Despacito",
    "Perfect", "Thinking Out Loud", "Castle on the Hill", "Photograph",
    "Bad Habits",
    ("Friends", {"pop": 15_000, "alts": ["Friends by Marshmello"]}),
    "Somebody That I Used to Know", "Pumped Up Kicks", "Midnight City",
    "Electric Feel", "Kids", "Time to Pretend", "Little Talks",
    "Sweater Weather", "Stressed Out", "Ride", "Heathens",
    "House of Gold", "Car Radio", "Truce", "Migraine", "Holding On to You",
    "The Sound of Silence", "Mrs Robinson", "The Boxer", "Cecilia",
    "Scarborough Fair", "Bridge over Troubled Water", "Homeward Bound",
    "April Come She Will", "Kathys Song",
]

MUSICIANS = [
    "Billy Joel", "Elton John", "Michael Jackson", "Madonna", "Prince",
    "David Bowie", "Freddie Mercury", "Elvis Presley", "Johnny Cash",
    "Bob Dylan", "Bruce Springsteen", "Stevie Wonder", "Aretha Franklin",
    "Whitney Houston", "Mariah Carey", "Celine Dion", "Adele",
    "Taylor Swift", "Beyonce", "Rihanna", "Lady Gaga", "Katy Perry",
    "Ariana Grande", "Billie Eilish", "Dua Lipa", "Olivia Rodrigo",
    "Ed Sheeran", "Bruno Mars", "Justin Bieber", "Justin Timberlake",
    "Usher", "John Legend", "Alicia Keys", "Norah Jones", "Amy Winehouse",
    "Sam Smith", "Lewis Capaldi", "Shawn Mendes", "Harry Styles",
    "Selena Gomez", "Demi Lovato", "Miley Cyrus", "Britney Spears",
    "Christina Aguilera", "Jennifer Lopez", "Shakira",
    "Enrique Iglesias", "Ricky Martin", "Bad Bunny", "J Balvin", "Drake",
    "Kendrick Lamar", "J Cole", "Kanye West", "Jay-Z", "Eminem",
    "Snoop Dogg", "Dr Dre", "Ice Cube", "50 Cent", "Nicki Minaj",
    "Cardi B", "Post Malone", "Travis Scott", "Lil Nas X",
    "Tyler the Creator", "Chance the Rapper", "Childish Gambino",
    "Pharrell Williams", "Calvin Harris", "David Guetta", "Avicii",
    "Marshmello", "Skrillex", "Zedd", "Kygo", "Tiesto", "Frank Sinatra",
    "Dean Martin", "Nat King Cole", "Louis Armstrong", "Ella Fitzgerald",
    "Billie Holiday", "Nina Simone", "Ray Charles", "Sam Cooke",
    "Otis Redding", "Marvin Gaye", "Al Green", "James Brown",
    "Chuck Berry", "Little Richard", "Buddy Holly", "Roy Orbison",
    "Jerry Lee Lewis", "BB King", "Eric Clapton", "Jimi Hendrix",
    "Carlos Santana", "Stevie Ray Vaughan", "John Mayer", "Jack White",
    "Lenny Kravitz", "Ozzy Osbourne", "Robert Plant", "Jimmy Page",
    "Paul McCartney", "John Lennon", "George Harrison", "Ringo Starr",
    "Mick Jagger", "Keith Richards", "Rod Stewart", "Phil Collins",
    "Peter Gabriel", "Sting", "Bryan Adams", "George Michael", "Cher",
    "Tina Turner", "Janet Jackson", "Diana Ross", "Dolly Parton",
    "Willie Nelson", "Kenny Rogers", "Garth Brooks", "Shania Twain",
    "Faith Hill", "Tim McGraw", "Keith Urban", "Carrie Underwood",
    "Blake Shelton", "Luke Bryan", "Kacey Musgraves", "Chris Stapleton",
    "John Denver", "James Taylor", "Carole King", "Joni Mitchell",
    "Neil Young", "Leonard Cohen", "Paul Simon", "Cat Stevens",
    "Van Morrison", "Bob Marley", "Jimmy Buffett", "Weird Al Yankovic",
    "Hans Zimmer", "John Williams", "Yo-Yo Ma", "Lang Lang",
    "Andrea Bocelli", "Luciano Pavarotti", "Ludwig van Beethoven",
    "Wolfgang Amadeus Mozart", "Johann Sebastian Bach", "Frederic Chopin",
    "Franz Schubert", "Johannes Brahms", "Antonio Vivaldi",
    "Pyotr Tchaikovsky", "Claude Debussy", "Erik Satie", "Philip Glass",
    "Lorde", "Sia", "Halsey", "Lizzo", "Doja Cat", "SZA", "The Weeknd",
    "Frank Ocean", "Tyler Childers", "Hozier", "Vance Joy",
    "George Ezra", "Tom Odell", "Passenger", "Jack Johnson",
    "Colbie Caillat", "Jason Mraz", "John Fogerty", "Gordon Lightfoot",
]

BANDS = [
    ("The Beatles", {"id": "Q1299", "pop": 140_000, "alts": ["Beatles"]}),
    "The Rolling Stones", "Led Zeppelin", "Pink Floyd", "Queen", "The Who",
    "The Doors",
    ("Fleetwood Mac", {"pop": 70_000}),
    ("Eagles", {"pop": 62_000, "alts": ["The Eagles"]}),
    "AC/DC", "Aerosmith", "Guns N Roses", "Metallica", "Iron Maiden",
    "Black Sabbath", "Deep Purple", "Judas Priest", "Megadeth", "Nirvana",
    "Pearl Jam", "Soundgarden", "Alice in Chains", "Stone Temple Pilots",
    "Red Hot Chili Peppers", "Foo Fighters", "Green Day", "The Offspring",
    "Blink-182", "Sum 41", "Linkin Park", "System of a Down",
    "Rage Against the Machine", "Audioslave", "Radiohead", "Coldplay",
    "Oasis", "Blur", "The Verve", "Arctic Monkeys", "The Strokes",
    "The White Stripes", "The Black Keys", "Kings of Leon", "Muse",
    "Imagine Dragons", "OneRepublic", "Maroon 5", "The Killers",
    "Franz Ferdinand", "Arcade Fire", "Vampire Weekend", "MGMT",
    "Foster the People", "The 1975", "Twenty One Pilots",
    "Panic at the Disco", "Fall Out Boy", "My Chemical Romance",
    "Paramore", "Evanescence", "U2", "Depeche Mode", "The Cure",
    "The Smiths", "Joy Division", "New Order", "Duran Duran",
    "Tears for Fears", "a-ha", "The Police", "Dire Straits", "Genesis",
    "Rush",
    ("Journey", {"pop": 58_000}),
    "Boston", "Toto", "Kansas",
    ("Chicago", {"pop": 60_000, "alts": ["Chicago the band"]}),
    "Foreigner", "Styx", "REO Speedwagon",
    ("Survivor", {"pop": 30_000, "alts": ["Survivor the band"]}),
    "Heart", "Blondie", "The B-52s", "Talking Heads", "Ramones",
    "The Clash", "The Beach Boys", "The Byrds", "The Monkees",
    "Simon and Garfunkel", "Creedence Clearwater Revival",
    "Lynyrd Skynyrd", "The Allman Brothers Band", "ZZ Top", "Van Halen",
    "Bon Jovi", "Def Leppard", "Whitesnake", "Poison", "Motley Crue",
    "Kiss", "Twisted Sister", "Scorpions", "Europe", "ABBA", "Bee Gees",
    "Earth Wind and Fire", "Kool and the Gang", "Chic", "The Jackson 5",
    "The Temptations", "The Supremes", "The Four Seasons",
    "Backstreet Boys", "NSYNC", "One Direction", "Jonas Brothers",
    "Destinys Child", "Spice Girls", "TLC", "Little Mix",
    "Fifth Harmony", "BTS", "Blackpink", "Twice", "Daft Punk", "Gorillaz",
    "The Chainsmokers", "Clean Bandit", "Mumford and Sons",
    "The Lumineers", "Of Monsters and Men", "Florence and the Machine",
    "Bastille", "alt-J", "Glass Animals", "Tame Impala", "Weezer",
    "The Smashing Pumpkins", "Nine Inch Nails", "Tool", "Slipknot",
    "Avenged Sevenfold", "Fleet Foxes", "Bon Iver", "The National",
    "Wilco", "Death Cab for Cutie", "Modest Mouse", "The Shins",
    "Snow Patrol", "Keane", "Portugal the Man", "Cage the Elephant",
    "Young the Giant", "Walk the Moon", "The Moody Blues", "The Animals",
    "The Kinks", "The Yardbirds", "Cream", "Jefferson Airplane",
    "Grateful Dead", "The Band", "Crosby Stills and Nash", "The Eels",
    "Steely Dan", "Electric Light Orchestra", "Supertramp",
]

ACTORS = [
    "Adam Driver", "Jennifer Aniston", "Tom Hanks", "Tom Cruise",
    "Brad Pitt", "Leonardo DiCaprio", "Johnny Depp", "Robert Downey Jr",
    "Chris Evans", "Chris Hemsworth", "Chris Pratt", "Scarlett Johansson",
    "Natalie Portman", "Emma Stone", "Emma Watson", "Jennifer Lawrence",
    "Anne Hathaway", "Meryl Streep", "Cate Blanchett", "Nicole Kidman",
    "Charlize Theron", "Julia Roberts", "Sandra Bullock",
    "Reese Witherspoon", "Angelina Jolie", "Denzel Washington",
    "Will Smith", "Morgan Freeman", "Samuel L Jackson", "Dwayne Johnson",
    "Kevin Hart", "Ryan Reynolds", "Ryan Gosling", "Jake Gyllenhaal",
    "Matt Damon", "Ben Affleck", "Christian Bale", "Hugh Jackman",
    "Russell Crowe", "Joaquin Phoenix", "Heath Ledger", "Gary Oldman",
    "Anthony Hopkins", "Ian McKellen", "Patrick Stewart", "Michael Caine",
    "Sean Connery", "Harrison Ford", "Mark Hamill", "Carrie Fisher",
    "Daisy Ridley", "John Boyega", "Oscar Isaac", "Pedro Pascal",
    "Keanu Reeves", "Laurence Fishburne", "Hugo Weaving", "Tilda Swinton",
    "Benedict Cumberbatch", "Martin Freeman", "Tom Hiddleston",
    "Chris Pine", "Zachary Quinto", "Zoe Saldana", "Vin Diesel",
    "Jason Statham", "Jason Momoa", "Gal Gadot", "Henry Cavill",
    "Amy Adams", "Jesse Eisenberg", "Andrew Garfield", "Tobey Maguire",
    "Tom Holland", "Zendaya", "Timothee Chalamet", "Saoirse Ronan",
    "Florence Pugh", "Anya Taylor-Joy", "Margot Robbie", "Emily Blunt",
    "John Krasinski", "Steve Carell", "Rainn Wilson", "Mindy Kaling",
    "Ed Helms", "Tina Fey", "Amy Poehler", "Bill Murray", "Dan Aykroyd",
    "Eddie Murphy", "Jim Carrey", "Mike Myers", "Adam Sandler",
    "Ben Stiller", "Owen Wilson", "Vince Vaughn", "Will Ferrell",
    "Steve Martin", "Robin Williams", "Whoopi Goldberg",
    "Octavia Spencer", "Viola Davis", "Lupita Nyongo",
    "Chadwick Boseman", "Michael B Jordan", "Idris Elba",
    "Daniel Kaluuya", "Mahershala Ali", "Jamie Foxx", "Forest Whitaker",
    "Halle Berry", "Zoe Kravitz", "Kristen Stewart", "Robert Pattinson",
    "Daniel Radcliffe", "Rupert Grint", "Maggie Smith", "Alan Rickman",
    "Ralph Fiennes", "Colin Firth", "Hugh Grant", "Keira Knightley",
    "Orlando Bloom", "Eva Green", "Daniel Craig", "Judi Dench",
    "Helen Mirren", "Emma Thompson", "Kate Winslet", "Jude Law",
    "Ewan McGregor", "Liam Neeson", "Cillian Murphy",
    "Michael Fassbender", "James McAvoy", "Jeremy Renner", "Mark Ruffalo",
    "Elizabeth Olsen", "Paul Rudd", "Don Cheadle", "Jeff Goldblum",
    "Sam Neill", "Laura Dern", "Sigourney Weaver", "Jodie Foster",
    "Anthony Mackie", "Sebastian Stan", "Winona Ryder",
    "Millie Bobby Brown", "David Harbour", "Finn Wolfhard",
    "Michelle Yeoh", "Michelle Pfeiffer", "Al Pacino", "Robert De Niro",
    "Joe Pesci", "Ray Liotta", "Jack Nicholson", "Marlon Brando",
    "Audrey Hepburn", "Grace Kelly", "Cary Grant", "James Stewart",
    "Humphrey Bogart", "Ingrid Bergman", "Marilyn Monroe", "Gene Hackman",
    "Dustin Hoffman", "Robert Redford", "Paul Newman", "Sidney Poitier",
    "Katharine Hepburn", "Elizabeth Taylor", "Jackie Chan", "Jet Li",
    "Donnie Yen", "Michelle Rodriguez", "Paul Walker", "John Cena",
    "Dave Bautista", "Karen Gillan", "Bradley Cooper", "Jonah Hill",
    "Channing Tatum", "Seth Rogen", "James Franco", "Jason Bateman",
    "Kristen Wiig", "Melissa McCarthy", "Rebel Wilson", "Anna Kendrick",
    "Aubrey Plaza", "Chris Rock", "Dave Chappelle", "Bill Hader",
    "Andy Samberg", "Donald Glover", "Danny DeVito", "Christopher Walken",
    "Willem Dafoe", "John Malkovich", "Stanley Tucci", "Ke Huy Quan",
]

DIRECTORS = [
    "Steven Spielberg", "Martin Scorsese", "Quentin Tarantino",
    "Christopher Nolan", "Alfred Hitchcock", "Stanley Kubrick",
    "Ridley Scott", "James Cameron", "Peter Jackson", "George Lucas",
    "Francis Ford Coppola", "Tim Burton", "Wes Anderson", "David Fincher",
    "Denis Villeneuve", "Guillermo del Toro", "Alfonso Cuaron",
    "Bong Joon-ho", "Hayao Miyazaki", "Akira Kurosawa",
    ("Clint Eastwood", {"pop": 85_000}),
    "Mel Brooks", "Rob Reiner", "Ron Howard", "Robert Zemeckis",
    "John Carpenter", "Wes Craven", "Jordan Peele", "Spike Lee",
    "Ava DuVernay", "Greta Gerwig", "Sofia Coppola", "Kathryn Bigelow",
    "Patty Jenkins", "Taika Waititi", "James Gunn", "Zack Snyder",
    "Joss Whedon", "JJ Abrams", "Michael Bay", "Roland Emmerich",
    "Baz Luhrmann", "Danny Boyle", "Guy Ritchie", "Edgar Wright",
    "Matthew Vaughn", "Sam Mendes", "Sam Raimi", "M Night Shyamalan",
    "Darren Aronofsky", "Paul Thomas Anderson", "Joel Coen", "Ethan Coen",
    "David Lynch", "Terrence Malick", "Oliver Stone", "Billy Wilder",
    "Orson Welles", "John Ford", "Frank Capra", "Sergio Leone",
    "Federico Fellini", "Ingmar Bergman", "Andrei Tarkovsky",
    "John Hughes", "Nora Ephron", "Nancy Meyers", "Richard Linklater",
    "Gus Van Sant", "Ang Lee", "John Woo", "Park Chan-wook",
]

ATHLETES = [
    "Michael Jordan", "LeBron James", "Kobe Bryant", "Shaquille ONeal",
    "Magic Johnson", "Larry Bird", "Kareem Abdul-Jabbar", "Stephen Curry",
    "Kevin Durant", "Giannis Antetokounmpo", "Nikola Jokic",
    "Luka Doncic", "Dirk Nowitzki", "Tim Duncan", "Allen Iverson",
    "Dwyane Wade", "Chris Paul", "James Harden", "Russell Westbrook",
    "Kawhi Leonard", "Tom Brady", "Peyton Manning", "Aaron Rodgers",
    "Patrick Mahomes", "Drew Brees", "Brett Favre", "Joe Montana",
    "Jerry Rice", "Emmitt Smith", "Barry Sanders", "Walter Payton",
    "Dan Marino", "John Elway", "Lamar Jackson", "Josh Allen",
    "Travis Kelce", "Rob Gronkowski", "JJ Watt", "Aaron Donald",
    "Odell Beckham Jr", "Lionel Messi", "Cristiano Ronaldo", "Neymar",
    "Kylian Mbappe", "Erling Haaland", "Mohamed Salah",
    "Kevin De Bruyne", "Luka Modric", "Zlatan Ibrahimovic",
    "Robert Lewandowski", "Sergio Ramos", "Andres Iniesta", "Xavi",
    "Ronaldinho", "Kaka", "Pele", "Diego Maradona", "Zinedine Zidane",
    "Thierry Henry", "David Beckham", "Wayne Rooney", "Steven Gerrard",
    "Frank Lampard", "Didier Drogba", "Harry Kane", "Son Heung-min",
    "Virgil van Dijk", "Manuel Neuer", "Gianluigi Buffon",
    "Serena Williams", "Venus Williams", "Roger Federer", "Rafael Nadal",
    "Novak Djokovic", "Andy Murray", "Maria Sharapova", "Naomi Osaka",
    "Coco Gauff", "Carlos Alcaraz", "Pete Sampras", "Andre Agassi",
    "Steffi Graf", "Martina Navratilova", "Billie Jean King",
    "John McEnroe", "Tiger Woods", "Phil Mickelson", "Rory McIlroy",
    "Jack Nicklaus", "Arnold Palmer", "Jordan Spieth", "Usain Bolt",
    "Michael Phelps", "Katie Ledecky", "Simone Biles", "Nadia Comaneci",
    "Carl Lewis", "Jesse Owens", "Mo Farah", "Eliud Kipchoge",
    "Allyson Felix", "Wayne Gretzky", "Mario Lemieux", "Sidney Crosby",
    "Alex Ovechkin", "Connor McDavid", "Auston Matthews", "Bobby Orr",
    "Gordie Howe", "Babe Ruth", "Lou Gehrig", "Jackie Robinson",
    "Hank Aaron", "Willie Mays", "Ted Williams", "Joe DiMaggio",
    "Mickey Mantle", "Derek Jeter", "Ken Griffey Jr", "Barry Bonds",
    "Ichiro Suzuki", "Shohei Ohtani", "Mike Trout", "Aaron Judge",
    "Clayton Kershaw", "David Ortiz", "Albert Pujols", "Muhammad Ali",
    "Mike Tyson", "Floyd Mayweather", "Manny Pacquiao", "Canelo Alvarez",
    "Conor McGregor", "Khabib Nurmagomedov", "Jon Jones", "Ronda Rousey",
    "Georges St-Pierre", "Anderson Silva", "Lewis Hamilton",
    "Max Verstappen", "Michael Schumacher", "Ayrton Senna",
    "Sebastian Vettel", "Fernando Alonso", "Valentino Rossi", "Tony Hawk",
    "Shaun White", "Kelly Slater", "Lindsey Vonn", "Mikaela Shiffrin",
    "Megan Rapinoe", "Alex Morgan", "Abby Wambach", "Mia Hamm",
    "Sue Bird", "Diana Taurasi", "Candace Parker", "Breanna Stewart",
    "Caitlin Clark", "Yogi Berra", "Nolan Ryan", "Randy Johnson",
    "Pedro Martinez", "Greg Maddux", "Cal Ripken Jr", "Roberto Clemente",
]

SPORTS_TEAMS = [
    ("Toronto Maple Leafs", {"id": "Q7826440", "alts": ["Maple Leafs"], "pop": 48_000}),
    ("Los Angeles Lakers", {"alts": ["Lakers"], "pop": 95_000}),
    ("Boston Celtics", {"alts": ["Celtics"]}),
    ("Golden State Warriors", {"alts": ["Warriors"]}),
    ("Chicago Bulls", {"alts": ["Bulls"]}),
    "Miami Heat",
    ("New York Knicks", {"alts": ["Knicks"]}),
    "Brooklyn Nets",
    ("Philadelphia 76ers", {"alts": ["Sixers"]}),
    "Milwaukee Bucks", "Phoenix Suns",
    ("Dallas Mavericks", {"alts": ["Mavericks"]}),
    "Denver Nuggets",
    ("San Antonio Spurs", {"alts": ["Spurs"], "pop": 30_000}),
    "Houston Rockets", "Oklahoma City Thunder", "Portland Trail Blazers",
    "Utah Jazz",
    ("Toronto Raptors", {"alts": ["Raptors"]}),
    ("Cleveland Cavaliers", {"alts": ["Cavaliers"]}),
    "Atlanta Hawks", "Memphis Grizzlies", "Minnesota Timberwolves",
    "New Orleans Pelicans", "Sacramento Kings", "Orlando Magic",
    "Detroit Pistons", "Indiana Pacers", "Charlotte Hornets",
    "Washington Wizards", "Los Angeles Clippers",
    ("New England Patriots", {"alts": ["Patriots"]}),
    ("Dallas Cowboys", {"alts": ["Cowboys"], "pop": 88_000}),
    ("Green Bay Packers", {"alts": ["Packers"]}),
    ("Pittsburgh Steelers", {"alts": ["Steelers"]}),
    ("Kansas City Chiefs", {"alts": ["Chiefs"]}),
    ("San Francisco 49ers", {"alts": ["49ers", "Niners"]}),
    ("Seattle Seahawks", {"alts": ["Seahawks"]}),
    "Denver Broncos",
    ("Las Vegas Raiders", {"alts": ["Raiders"]}),
    ("Chicago Bears", {"alts": ["Bears"]}),
    ("New York Giants", {"alts": ["Giants"], "pop": 44_000}),
    ("Philadelphia Eagles", {"alts": ["Eagles"], "pop": 46_000}),
    "Buffalo Bills",
    ("Miami Dolphins", {"alts": ["Dolphins"]}),
    ("Minnesota Vikings", {"alts": ["Vikings"], "pop": 33_000}),
    "Baltimore Ravens", "Cincinnati Bengals", "New Orleans Saints",
    ("Tampa Bay Buccaneers", {"alts": ["Buccaneers"]}),
    "Los Angeles Rams", "Detroit Lions", "Cleveland Browns",
    "Indianapolis Colts",
    ("Tennessee Titans", {"alts": ["Titans"]}),
    "Houston Texans", "Jacksonville Jaguars",
    ("Arizona Cardinals", {"alts": ["Cardinals"], "pop": 21_000}),
    "Carolina Panthers", "Atlanta Falcons", "New York Jets",
    "Washington Commanders", "Los Angeles Chargers",
    ("New York Yankees", {"alts": ["Yankees"], "pop": 82_000}),
    ("Boston Red Sox", {"alts": ["Red Sox"]}),
    ("Los Angeles Dodgers", {"alts": ["Dodgers"]}),
    ("Chicago Cubs", {"alts": ["Cubs"]}),
    ("San Francisco Giants", {"pop": 28_000}),
    ("St Louis Cardinals", {"pop": 27_000}),
    "Houston Astros", "Atlanta Braves", "New York Mets",
    "Philadelphia Phillies",
    ("Texas Rangers", {"alts": ["Rangers"], "pop": 19_000}),
    ("Toronto Blue Jays", {"alts": ["Blue Jays"]}),
    "Seattle Mariners", "Chicago White Sox", "Oakland Athletics",
    "Cincinnati Reds",
    ("Pittsburgh Pirates", {"pop": 15_000}),
    "San Diego Padres", "Milwaukee Brewers", "Baltimore Orioles",
    ("Montreal Canadiens", {"alts": ["Canadiens"]}),
    ("Boston Bruins", {"alts": ["Bruins"]}),
    ("New York Rangers", {"pop": 23_000}),
    ("Detroit Red Wings", {"alts": ["Red Wings"]}),
    ("Chicago Blackhawks", {"alts": ["Blackhawks"]}),
    ("Pittsburgh Penguins", {"alts": ["Penguins"]}),
    ("Edmonton Oilers", {"alts": ["Oilers"]}),
    "Tampa Bay Lightning", "Colorado Avalanche", "Vegas Golden Knights",
    "Washington Capitals", "Philadelphia Flyers",
    ("Manchester United", {"alts": ["Man United"], "pop": 92_000}),
    ("Manchester City", {"alts": ["Man City"]}),
    ("Liverpool FC", {"alts": ["Liverpool"]}),
    ("Chelsea FC", {"alts": ["Chelsea"]}),
    "Arsenal",
    ("Tottenham Hotspur", {"alts": ["Spurs", "Tottenham"], "pop": 26_000}),
    "Real Madrid",
    ("FC Barcelona", {"alts": ["Barcelona", "Barca"]}),
    "Atletico Madrid", "Bayern Munich", "Borussia Dortmund", "Juventus",
    "AC Milan", "Inter Milan", "Napoli", "AS Roma",
    ("Paris Saint-Germain", {"alts": ["PSG"]}),
    "Ajax", "Porto", "Benfica", "Celtic", "LA Galaxy", "Inter Miami",
]

BOOKS = [
    ("Harry Potter and the Sorcerers Stone",
     {"pop": 90_000, "alts": ["Harry Potter and the Philosophers Stone"]}),
    ("The Hobbit", {"pop": 48_000, "alts": ["The Hobbit the book"]}),
    ("The Lord of the Rings", {"alts": ["Lord of the Rings"], "pop": 75_000}),
    ("The Dresden Files", {"id": "Q2307373", "alts": ["Dresden Files"], "pop": 6_000}),
    "Storm Front", "A Game of Thrones", "A Clash of Kings",
    "A Storm of Swords", "To Kill a Mockingbird", "The Great Gatsby",
    "1984", "Animal Farm", "Brave New World", "Fahrenheit 451",
    "The Catcher in the Rye", "Of Mice and Men", "The Grapes of Wrath",
    "East of Eden", "Pride and Prejudice", "Sense and Sensibility",
    "Jane Eyre", "Wuthering Heights", "Great Expectations",
    "Oliver Twist", "A Tale of Two Cities", "David Copperfield",
    "The Adventures of Huckleberry Finn", "The Adventures of Tom Sawyer",
    "Little Women", "Anne of Green Gables", "The Secret Garden",
    "Charlottes Web", "Charlie and the Chocolate Factory",
    "James and the Giant Peach", "Matilda", "The BFG", "The Witches",
    ("Fantastic Mr Fox", {"pop": 5_000, "alts": ["Fantastic Mr Fox the book"]}),
    "The Lion the Witch and the Wardrobe", "Prince Caspian",
    ("The Chronicles of Narnia", {"pop": 20_000, "alts": ["Narnia"]}),
    "A Wrinkle in Time", "The Giver", "Holes", "Hatchet",
    "Bridge to Terabithia", "Where the Red Fern Grows",
    "Island of the Blue Dolphins", "The Lightning Thief",
    ("The Hunger Games", {"pop": 40_000, "alts": ["The Hunger Games the book"]}),
    ("Catching Fire", {"pop": 18_000, "alts": ["Catching Fire the book"]}),
    "Mockingjay",
    ("Divergent", {"pop": 12_000, "alts": ["Divergent the book"]}),
    "Insurgent",
    ("The Maze Runner", {"pop": 10_000, "alts": ["The Maze Runner the book"]}),
    ("The Fault in Our Stars", {"pop": 12_500, "alts": ["The Fault in Our Stars the book"]}),
    "Looking for Alaska", "Paper Towns", "Thirteen Reasons Why",
    ("Twilight", {"pop": 26_000, "alts": ["Twilight the book"]}),
    "New Moon", "Eclipse", "Breaking Dawn",
    ("Enders Game", {"pop": 6_500, "alts": ["Enders Game the book"]}),
    "Foundation", "I Robot",
    ("Dune", {"pop": 52_000, "alts": ["Dune the book"]}),
    "Dune Messiah",
    ("The Martian", {"pop": 20_000, "alts": ["The Martian the book"]}),
    ("Ready Player One", {"pop": 14_000, "alts": ["Ready Player One the book"]}),
    ("The Hitchhikers Guide to the Galaxy", {"pop": 8_000, "alts": ["Hitchhikers Guide"]}),
    "American Gods", "Neverwhere",
    ("Coraline", {"pop": 7_000, "alts": ["Coraline the book"]}),
    "The Graveyard Book", "The Name of the Wind", "The Wise Mans Fear",
    "Mistborn", "The Way of Kings", "The Eye of the World",
    "A Wizard of Earthsea", "The Colour of Magic",
    ("The Da Vinci Code", {"pop": 22_000, "alts": ["The Da Vinci Code the book"]}),
    "Angels and Demons", "Inferno", "The Girl with the Dragon Tattoo",
    "Gone Girl", "The Girl on the Train",
    ("Big Little Lies", {"pop": 6_000, "alts": ["Big Little Lies the book"]}),
    "Sharp Objects", "In Cold Blood",
    ("The Shining", {"pop": 24_000, "alts": ["The Shining the book"]}),
    "Pet Sematary", "Misery", "The Stand", "The Green Mile the book",
    "Salems Lot", "Doctor Sleep", "Carrie", "The Outsiders",
    "Lord of the Flies", "The Old Man and the Sea",
    "For Whom the Bell Tolls", "A Farewell to Arms",
    "The Sun Also Rises", "Slaughterhouse-Five", "Cats Cradle",
    "Catch-22", "One Hundred Years of Solitude",
    "Love in the Time of Cholera", "The Alchemist", "The Little Prince",
    ("Life of Pi", {"pop": 13_000, "alts": ["Life of Pi the book"]}),
    "The Kite Runner", "A Thousand Splendid Suns",
    ("The Book Thief", {"pop": 7_000, "alts": ["The Book Thief the book"]}),
    "All the Light We Cannot See", "Where the Crawdads Sing",
    "Educated", "Becoming", "Sapiens", "Atomic Habits",
    "Thinking Fast and Slow", "Outliers", "The Power of Habit", "Quiet",
    "Frankenstein", "Dracula", "The Picture of Dorian Gray",
    "The Strange Case of Dr Jekyll and Mr Hyde", "The Time Machine",
    "The War of the Worlds", "Twenty Thousand Leagues Under the Sea",
    "Around the World in Eighty Days", "Journey to the Center of the Earth",
    "Treasure Island", "Robinson Crusoe", "Gullivers Travels",
    "Don Quixote", "Crime and Punishment", "The Brothers Karamazov",
    "War and Peace", "Anna Karenina", "The Idiot", "The Trial",
    "The Metamorphosis", "The Stranger", "The Count of Monte Cristo",
    "The Three Musketeers", "Les Miserables the novel",
    "The Hunchback of Notre-Dame", "Alices Adventures in Wonderland",
    "Through the Looking-Glass", "The Wind in the Willows",
    "Winnie-the-Pooh", "Peter Pan and Wendy", "A Christmas Carol",
]

AUTHORS = [
    "JK Rowling", "JRR Tolkien", "George RR Martin", "Jim Butcher",
    "Stephen King", "Agatha Christie", "Arthur Conan Doyle",
    "Jane Austen", "Charles Dickens", "Mark Twain", "Ernest Hemingway",
    "F Scott Fitzgerald", "John Steinbeck", "George Orwell",
    "Aldous Huxley", "Ray Bradbury", "Isaac Asimov", "Arthur C Clarke",
    "Frank Herbert", "Ursula K Le Guin", "Terry Pratchett", "Neil Gaiman",
    "Douglas Adams", "Kurt Vonnegut", "Joseph Heller", "Harper Lee",
    "Toni Morrison", "Maya Angelou", "Langston Hughes", "James Baldwin",
    "Zora Neale Hurston", "Alice Walker", "Octavia Butler",
    "NK Jemisin", "Brandon Sanderson", "Patrick Rothfuss",
    "Robert Jordan", "Robin Hobb", "Margaret Atwood", "Alice Munro",
    "Gabriel Garcia Marquez", "Paulo Coelho", "Haruki Murakami",
    "Kazuo Ishiguro", "Salman Rushdie", "Chimamanda Ngozi Adichie",
    "Khaled Hosseini", "Yann Martel", "Markus Zusak", "John Green",
    "Rainbow Rowell", "Suzanne Collins", "Veronica Roth", "Rick Riordan",
    "Roald Dahl", "CS Lewis", "Lewis Carroll", "JM Barrie",
    "Frances Hodgson Burnett", "LM Montgomery", "Louisa May Alcott",
    "Emily Bronte", "Charlotte Bronte", "Mary Shelley", "Bram Stoker",
    "Edgar Allan Poe", "HP Lovecraft", "Shirley Jackson",
    "Daphne du Maurier", "Ian Fleming", "John le Carre", "Tom Clancy",
    "Michael Crichton", "Dan Brown", "James Patterson", "John Grisham",
    "David Baldacci", "Lee Child", "Gillian Flynn", "Paula Hawkins",
    "Liane Moriarty", "Celeste Ng", "Delia Owens", "Tara Westover",
    "Michelle Obama", "Malcolm Gladwell", "Yuval Noah Harari",
    "James Clear", "Daniel Kahneman", "Susan Cain", "Ta-Nehisi Coates",
    "Trevor Noah", "William Shakespeare", "Homer", "Leo Tolstoy",
    "Fyodor Dostoevsky", "Anton Chekhov", "Franz Kafka", "Albert Camus",
    "Victor Hugo", "Alexandre Dumas", "Jules Verne", "HG Wells",
    "George Eliot", "Virginia Woolf", "James Joyce", "Oscar Wilde",
    "Emily Dickinson", "Robert Frost", "Walt Whitman", "Sylvia Plath",
    "John Milton", "Geoffrey Chaucer", "Herman Hesse", "Umberto Eco",
    "Italo Calvino", "Jorge Luis Borges", "Pablo Neruda",
]

BOARD_GAMES = [
    ("Monopoly", {"pop": 56_000}),
    "Scrabble", "Chess", "Checkers", "Backgammon", "Candy Land",
    "Chutes and Ladders", "Snakes and Ladders", "Connect Four",
    ("Battleship", {"pop": 14_000, "alts": ["Battleship the board game"]}),
    "Stratego", "Axis and Allies",
    ("Settlers of Catan", {"alts": ["Catan"]}),
    "Carcassonne", "Ticket to Ride",
    ("Pandemic", {"alts": ["Pandemic the board game"]}),
    "Dominion", "7 Wonders", "Splendor", "Azul", "Wingspan",
    "Terraforming Mars", "Gloomhaven", "Betrayal at House on the Hill",
    "Scythe", "Root", "Everdell", "Spirit Island", "Twilight Struggle",
    "Agricola", "Puerto Rico", "Power Grid", "Codenames", "Dixit",
    "Pictionary", "Taboo", "Trivial Pursuit", "Balderdash", "Boggle",
    "Yahtzee", "Uno", "Exploding Kittens", "Apples to Apples", "Jenga",
    ("Twister", {"pop": 9_000, "alts": ["Twister the game"]}),
    "The Game of Life", "Mouse Trap", "Hungry Hungry Hippos",
    "Guess Who",
    ("Othello", {"alts": ["Reversi"]}),
    "Mastermind", "Mancala", "Dominoes", "Mahjong", "Cribbage",
    "Parcheesi", "Blokus", "Sequence", "Rummikub", "Qwirkle",
    "Patchwork", "Kingdomino", "Sushi Go", "Love Letter", "Hanabi",
    "The Crew", "Cascadia", "Calico",
]

VIDEO_GAMES = [
    "Minecraft", "Fortnite", "Roblox", "Among Us", "Fall Guys",
    "Rocket League", "League of Legends", "Dota 2", "Counter-Strike",
    "Valorant", "Overwatch", "Apex Legends", "Call of Duty",
    "Battlefield",
    ("Halo", {"pop": 50_000, "alts": ["Halo the game"]}),
    "Destiny 2", "Gears of War", "God of War",
    ("The Last of Us", {"pop": 70_000, "alts": ["The Last of Us the game"]}),
    ("Uncharted", {"pop": 25_000, "alts": ["Uncharted the game"]}),
    "Horizon Zero Dawn", "Ghost of Tsushima",
    ("Spider-Man the game", {"alts": ["Marvels Spider-Man"]}),
    "Bloodborne", "Dark Souls", "Elden Ring", "Sekiro", "Demons Souls",
    "Hollow Knight", "Celeste", "Hades", "Dead Cells",
    "Ori and the Blind Forest", "Cuphead", "Undertale", "Stardew Valley",
    "Terraria", "Dont Starve", "Subnautica", "No Mans Sky",
    "Outer Wilds", "The Outer Worlds", "Mass Effect", "Dragon Age",
    ("Skyrim", {"alts": ["The Elder Scrolls V Skyrim"], "pop": 62_000}),
    "Oblivion", "Morrowind", "Fallout", "Fallout New Vegas",
    ("The Witcher 3", {"alts": ["The Witcher 3 Wild Hunt"], "pop": 54_000}),
    "Cyberpunk 2077",
    ("Grand Theft Auto V", {"alts": ["GTA V", "GTA 5"]}),
    ("Red Dead Redemption 2", {"alts": ["Red Dead Redemption"]}),
    "Assassins Creed", "Far Cry", "Watch Dogs", "Rainbow Six Siege",
    "Splinter Cell", "Hitman", "Doom", "Quake", "Wolfenstein",
    "Half-Life",
    ("Portal", {"alts": ["Portal the game"]}),
    "Portal 2", "Left 4 Dead", "Team Fortress 2", "The Sims", "SimCity",
    "Cities Skylines", "Civilization", "Age of Empires", "StarCraft",
    ("World of Warcraft", {"alts": ["WoW"]}),
    "Diablo", "Hearthstone", "Path of Exile", "Runescape",
    ("Animal Crossing", {"alts": ["Animal Crossing New Horizons"]}),
    ("Breath of the Wild", {"alts": ["The Legend of Zelda Breath of the Wild"]}),
    ("Tears of the Kingdom", {"alts": ["The Legend of Zelda Tears of the Kingdom"]}),
    "Ocarina of Time", "Majoras Mask", "Super Mario Bros",
    "Super Mario Odyssey", "Super Mario 64",
    ("Mario Kart 8", {"alts": ["Mario Kart"]}),
    ("Super Smash Bros Ultimate", {"alts": ["Super Smash Bros"]}),
    "Mario Party", "Luigis Mansion", "Donkey Kong", "Kirby", "Metroid",
    "Pokemon Go", "Pikmin", "Splatoon", "Fire Emblem",
    "Xenoblade Chronicles", "Persona 5",
    ("Final Fantasy VII", {"alts": ["Final Fantasy 7"]}),
    "Final Fantasy XIV", "Kingdom Hearts", "Dragon Quest",
    "Chrono Trigger", "Nier Automata", "Resident Evil", "Silent Hill",
    "Dead Space", "Five Nights at Freddys", "Limbo", "Fez",
    ("Journey", {"pop": 21_000, "alts": ["Journey the game"]}),
    "Firewatch", "Life Is Strange", "Detroit Become Human", "Heavy Rain",
    "Tetris",
    ("Pac-Man", {"alts": ["Pacman"]}),
    "Space Invaders", "Galaga", "Frogger", "Pong", "Street Fighter",
    "Mortal Kombat", "Tekken",
    ("Sonic the Hedgehog 2", {"alts": ["Sonic 2"]}),
    "Crash Bandicoot",
    ("Spyro the Dragon", {"alts": ["Spyro"]}),
    "Ratchet and Clank", "Shadow of the Colossus", "Bioshock",
    "Borderlands", "Dishonored", "Alan Wake", "Max Payne", "LA Noire",
    "Goat Simulator",
    ("Candy Crush Saga", {"alts": ["Candy Crush"]}),
    "Angry Birds", "Fruit Ninja", "Temple Run", "Subway Surfers",
    "Clash of Clans", "Clash Royale", "Brawl Stars", "Genshin Impact",
    "Wordle", "Slay the Spire", "Into the Breach", "FTL", "Rimworld",
    "Factorio", "Satisfactory", "Kerbal Space Program", "Besiege",
    "Totally Accurate Battle Simulator", "Euro Truck Simulator 2",
    "Microsoft Flight Simulator", "Forza Horizon", "Gran Turismo",
    "Need for Speed", "Burnout Paradise", "F-Zero", "Wave Race 64",
]

TYPE_LISTS = [
    ("movie", MOVIES),
    ("actor", ACTORS),
    ("director", DIRECTORS),
    ("tv_show", TV_SHOWS),
    ("song", SONGS),
    ("musician", MUSICIANS),
    ("band", BANDS),
    ("athlete", ATHLETES),
    ("sports_team", SPORTS_TEAMS),
    ("book", BOOKS),
    ("author", AUTHORS),
    ("board_game", BOARD_GAMES),
    ("video_game", VIDEO_GAMES),
]


def rank_popularity(rank: int) -> int:
    return int(round(BASE_POP / (rank + 1) ** 0.62))


def main() -> int:
    next_id = SYNTH_ID_START
    rows = []
    used_ids: set[str] = set()
    problems: list[str] = []
    for entity_type, entries in TYPE_LISTS:
        for rank, entry in enumerate(entries):
            if isinstance(entry, tuple):
                name, over = entry
            else:
                name, over = entry, {}
            entity_id = over.get("id")
            if entity_id is None:
                entity_id = f"Q{next_id}"
                next_id += 1
            if entity_id in used_ids:
                problems.append(f"duplicate id {entity_id} ({name})")
            used_ids.add(entity_id)
            alts = list(over.get("alts", []))
            pop = over.get("pop", rank_popularity(rank))
            for surface in [name, *alts]:
                if contains_profanity(surface):
                    problems.append(f"surface trips filter: {surface!r}")
                if not normalize_surface(surface):
                    problems.append(f"surface normalizes to nothing: {surface!r}")
            rows.append(
                {
                    "id": entity_id,
                    "canonical": name,
                    "alts": alts,
                    "type": entity_type,
                    "popularity": pop,
                    "topic": TYPE_TO_TOPIC[entity_type],
                }
            )
    if problems:
        for p in problems:
            print("ERROR:", p, file=sys.stderr)
        return 1
    OUT.parent.mkdir(parents=True, exist_ok=True)
    with open(OUT, "w", encoding="utf-8") as handle:
        for row in rows:
            handle.write(json.dumps(row, sort_keys=True) + "\n")
    counts: dict[str, int] = {}
    for row in rows:
        counts[row["type"]] = counts.get(row["type"], 0) + 1
    print(f"wrote {len(rows)} records to {OUT}")
    for etype, count in counts.items():
        print(f"  {etype:12s} {count}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
