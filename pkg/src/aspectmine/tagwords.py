"""Embedded word-to-tag dictionary backing the fallback tagger.

Unknown words default to NOUN downstream, so coverage here concentrates on
words that must NOT be treated as nouns: determiners, pronouns, prepositions,
verbs, adjectives, adverbs, and chat-style contractions. Domain words that
could plausibly be product aspects (update, call, chat, freeze, support, ...)
are deliberately left unlisted or listed as nouns.
"""

from __future__ import annotations

DETERMINERS = """
the a an this that these those my your his her its our their whose
some any no every each either neither another such both all few many much
more most several certain other which what
""".split()

PRONOUNS = """
i me you it we they them him us mine yours hers ours theirs
myself yourself himself herself itself ourselves yourselves themselves
who whom whoever someone anyone everyone nobody somebody anybody everybody
something anything everything nothing he she
u ya im i'm ive i've id i'd ill i'll youre you're theyre they're weve we've
it's whatever
""".split()

PREPOSITIONS = """
aboard about above across after against along amid among around at before
behind below beneath beside besides between beyond by concerning despite
down during except for from in inside into near of off on onto out outside
over past per through throughout till to toward towards under underneath
until unto up upon via with within without versus vs since
""".split()

# Regular verbs are expanded into -s/-ed/-ing forms below.
VERB_BASES = """
want love hate like dislike enjoy prefer use need seem appear happen
ask reply answer wait stay join follow unfollow block unblock mute unmute
delete remove install uninstall download upload load save share receive
open close start stop launch press click tap type scroll swipe drag zoom
turn switch sign log connect disconnect sync refresh reload restore reset
add create improve miss wish hope try help work fix change allow enable
disable play pause record search browse visit access manage handle
complain suggest recommend request realize notice expect include contain
look watch listen talk speak laugh cry smile annoy bother bore confuse
disappoint frustrate impress satisfy amaze suck rock fail succeed
""".split()

IRREGULAR_VERBS = """
am is are was were be been being
do does did doing done
have has had having
will would shall should can could may might must ought
make makes made making get gets got gotten getting give gives gave given
giving take takes took taken taking go goes went gone going come comes came
coming know knows knew known knowing think thinks thought thinking say says
said saying tell tells told telling see sees saw seen seeing feel feels felt
feeling find finds found finding keep keeps kept keeping let lets letting
put puts putting bring brings brought bringing buy buys bought buying pay
pays paid paying become becomes became becoming leave leaves left leaving
read reads reading write writes wrote written writing run runs ran running
sent meet meets met meeting lose loses lost losing win wins won winning
begin begins began begun beginning send sends sending
wanna gonna gotta
dont don't doesnt doesn't didnt didn't cant can't couldnt couldn't wont
won't wouldnt wouldn't shouldnt shouldn't isnt isn't arent aren't wasnt
wasn't werent weren't havent haven't hasnt hasn't hadnt hadn't aint ain't
""".split()

ADJECTIVES = """
good great bad nice awesome amazing excellent perfect wonderful fantastic
brilliant superb terrible awful horrible poor best worst better worse fine
okay ok new old latest recent previous next big small little large huge tiny
long short high low fast slow quick easy hard simple difficult complex free
cheap expensive useful useless helpful unhelpful annoying frustrating
confusing boring interesting fun funny cool lovely beautiful ugly pretty
happy sad angry upset glad sorry disappointed disappointing impressed
impressive satisfied unsatisfied smooth laggy buggy glitchy broken stable
unstable reliable unreliable secure insecure safe unsafe private public
clean bright dark light full empty wrong right correct incorrect true false
real fake actual main whole entire different same similar various multiple
single double instant constant frequent rare common weird strange normal
regular special important necessary unnecessary available unavailable
possible impossible able unable worth worthless decent solid crappy lousy
mediocre sluggish unresponsive responsive intuitive clunky outdated modern
sleek stylish elegant basic advanced current former daily weekly monthly
yearly annual automatic manual custom customizable default extra additional
numerous countless endless infinite unlimited limited blurry grainy choppy
noisy quiet loud silent dead alive stuck frozen handy pointless flawless
seamless effortless painful pleasant unpleasant gorgeous dreadful pathetic
ridiculous absurd fabulous marvelous delightful enjoyable addictive
""".split()

ADVERBS = """
very really extremely incredibly super truly quite rather somewhat slightly
barely hardly almost nearly too also just only even still yet already always
never sometimes often usually rarely seldom occasionally constantly
frequently again once twice now then soon later earlier recently currently
finally eventually suddenly immediately instantly quickly slowly easily
maybe perhaps probably definitely certainly surely absolutely completely
totally entirely fully partly mostly mainly especially particularly anymore
anyway instead otherwise meanwhile moreover furthermore here there
everywhere nowhere somewhere anywhere away back forth well badly alot not
overall
""".split()

OTHERS = """
and or but nor so if else unless although though while when whenever where
wherever why how whether than as yes yeah yep nope hmm oh wow hey hi hello
please thanks thx plz omg lol btw etc ever
one two three four five six seven eight nine ten zero
""".split()

PROPER_NOUNS = """
whatsapp snapchat kik hike instagram facebook telegram viber wechat skype
google apple android ios iphone ipad samsung windows microsoft twitter
youtube gmail
""".split()

# Words that stay nouns even though a suffix heuristic or a verb reading
# could claim them; mostly app-domain aspect vocabulary.
NOUNS = """
app apps update updates chat chats message messages text texts call calls
video videos photo photos picture pictures camera sticker stickers emoji
emojis theme themes status notification notifications group groups contact
contacts profile account login logout password backup battery storage memory
screen display interface design feature features version end encryption
privacy security support news game games timeline story stories filter
filters voice sound audio quality speed connection internet wifi data
server network bug bugs error errors problem problems issue issues freeze
restart crash crashes option options setting settings file files folder
media emoticon emoticons gif gifs wallpaper ringtone mode
""".split()


def _expand_verb(base: str) -> list[str]:
    """Produce base, 3rd-person, past, and -ing forms for a regular verb."""
    forms = [base]
    if base.endswith(("s", "x", "z", "ch", "sh")):
        forms.append(base + "es")
    elif base.endswith("y") and len(base) > 2 and base[-2] not in "aeiou":
        forms.append(base[:-1] + "ies")
    else:
        forms.append(base + "s")
    if base.endswith("e"):
        forms += [base + "d", base[:-1] + "ing"]
    elif base.endswith("y") and len(base) > 2 and base[-2] not in "aeiou":
        forms += [base[:-1] + "ied", base + "ing"]
    elif (
        len(base) >= 3
        and base[-1] not in "aeiouwxy"
        and base[-2] in "aeiou"
        and base[-3] not in "aeiou"
    ):
        forms += [base + base[-1] + "ed", base + base[-1] + "ing"]
    else:
        forms += [base + "ed", base + "ing"]
    return forms


def build_word_tags() -> dict[str, str]:
    """Build the word -> tag-name map; later groups override earlier ones."""
    table: dict[str, str] = {}
    for base in VERB_BASES:
        for form in _expand_verb(base):
            table[form] = "VERB"
    for word in IRREGULAR_VERBS:
        table[word] = "VERB"
    for word in ADJECTIVES:
        table[word] = "ADJ"
    for word in ADVERBS:
        table[word] = "ADV"
    for word in OTHERS:
        table[word] = "OTHER"
    for word in PREPOSITIONS:
        table[word] = "PREP"
    for word in PRONOUNS:
        table[word] = "PRON"
    for word in DETERMINERS:
        table[word] = "DET"
    for word in PROPER_NOUNS:
        table[word] = "PROPER_NOUN"
    for word in NOUNS:
        table[word] = "NOUN"
    return table


WORD_TAGS: dict[str, str] = build_word_tags()
