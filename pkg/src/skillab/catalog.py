"""The synthetic skill catalog.

Eight domains, five categories per domain, five skill templates per
category: 200 templates total. Each category also carries a competitor
group (one base skill plus two high-overlap paraphrase competitors), a
display label and description for hierarchical selection, and a phrase kit
that the policy generator assembles into per-tier policies.

Every template's task query is a pattern with typed parameter slots so task
generation is deterministic given a seed. Where a template has a canonical
example query, the pattern reproduces it exactly under canonical_params.
"""

from __future__ import annotations

from dataclasses import dataclass, field

DOMAINS = (
    "mathematics",
    "coding",
    "writing",
    "analysis",
    "translation",
    "question-answering",
    "formatting",
    "extraction",
)

DOMAIN_DESCRIPTIONS = {
    "mathematics": "Numeric calculation and quantitative reasoning",
    "coding": "Writing, fixing, and explaining code",
    "writing": "Composing and improving prose",
    "analysis": "Interpreting data and text for patterns",
    "translation": "Translating English into other languages",
    "question-answering": "Answering questions and explaining ideas",
    "formatting": "Converting content between formats",
    "extraction": "Pulling structured items out of text",
}

# Domains whose templates are semantically close enough to stress selection.
HIGH_SIMILARITY_DOMAINS = ("mathematics", "analysis", "extraction")

COMPLEXITY_TIERS = ("simple", "medium", "complex")

# ---------------------------------------------------------------------------
# Shared parameter pools for task query slots
# ---------------------------------------------------------------------------

POOLS: dict[str, tuple[str, ...]] = {
    "PEOPLE": (
        "John", "Mary", "Alice", "Bob", "Carol", "David",
        "Emma", "Frank", "Grace", "Henry",
    ),
    "PLACES": (
        "park", "station", "museum", "office", "market", "library", "harbor",
    ),
    "TOPICS": (
        "photosynthesis", "inflation", "gravity", "recursion",
        "evaporation", "magnetism", "osmosis", "compound interest",
    ),
    "MONTHS": (
        "Jan", "Feb", "Mar", "Apr", "May", "Jun",
        "Jul", "Aug", "Sep", "Oct", "Nov", "Dec",
    ),
    "EVENTS": ("Meeting", "Launch", "Review", "Audit", "Workshop"),
    "GOALS": (
        "reverse a string",
        "count vowels in a string",
        "merge two sorted lists",
        "compute a factorial",
        "remove duplicates from a list",
        "check whether a word is a palindrome",
        "sum the digits of an integer",
    ),
    "CHORES": (
        "rename every .txt file in a folder",
        "count the lines in a file",
        "download a file from a URL",
        "print the current date",
        "delete empty subdirectories",
    ),
    "CLASS_THINGS": (
        "bank account", "shopping cart", "parking lot",
        "music playlist", "library catalog",
    ),
    "LAMBDA_TASKS": (
        "doubles a number",
        "uppercases a string",
        "checks whether a number is even",
        "strips whitespace from a string",
        "returns the last element of a list",
    ),
    "FUNC_STUBS": ("square", "negate", "is_prime", "halve", "clamp"),
    "BUGGY": (
        "def add(a,b): return a-b",
        "def mul(a,b): return a+b",
        "def is_even(n): return n % 2 == 1",
        "def last(xs): return xs[len(xs)]",
    ),
    "ERRORY": (
        "print(undefined_variable)",
        "int('twelve')",
        "[1,2,3].append(4,5)",
        "open('missing.txt').reed()",
    ),
    "OFFBYONE": (
        "for i in range(1, len(items)): total += items[i]",
        "while i <= len(xs): print(xs[i]); i += 1",
        "last_char = text[len(text)]",
    ),
    "TRACE_SNIPPETS": (
        "x = 3; x += 4; print(x * 2)",
        "s = 'ab' * 3; print(len(s))",
        "n = 10 // 3; print(n + 1)",
        "xs = [1, 2, 3]; xs.pop(); print(sum(xs))",
    ),
    "GUARDLESS": (
        "def first(xs): return xs[0]",
        "def ratio(a, b): return a / b",
        "def head(line): return line.split()[0]",
    ),
    "UGLY_CODE": (
        "def f(x): return x == True and 1 or 0",
        "def sign(x): return (x > 0) * 1 + (x < 0) * -1 + (x == 0) * 0",
        "def cat(a, b): return ''.join([a] + [b])",
    ),
    "RENAME_SNIPS": (
        "def fn(a, b): c = a * b; return c",
        "x1 = get(); x2 = x1 * 1.2; send(x2)",
        "def p(q, r): return q - r",
    ),
    "DUP_SNIPS": (
        "total_a = price_a * 1.08; total_b = price_b * 1.08; total_c = price_c * 1.08",
        "print(header.upper()); print(footer.upper()); print(title.upper())",
    ),
    "CONDS": (
        "if not (x != 0) == False: go()",
        "if flag == True or flag == True: go()",
        "return (a and True) or (b and True)",
    ),
    "DEADCODE": (
        "def k(): return 1; print('done')",
        "if False: cleanup()",
        "x = 5; x = 5; return x",
    ),
    "EXPLAIN_SNIPS": (
        "xs[::-1]",
        "{k: v for k, v in pairs if v}",
        "sum(x * x for x in xs)",
        "sorted(words, key=len)",
    ),
    "ONE_LINERS": (
        "def area(r): return 3.14159 * r * r",
        "def caps(s): return s.title()",
        "def tail(xs): return xs[1:]",
    ),
    "SIGNATURES": (
        "pay(amount, rate, years)",
        "resize(image, width, height)",
        "route(origin, destination, mode)",
    ),
    "ALGO_SNIPS": (
        "repeatedly swap adjacent out-of-order pairs until no swaps remain",
        "halve a sorted search range around its midpoint until the target is found",
        "pick the smallest remaining element and move it to the front",
    ),
    "SNIPPET_PAIRS": (
        "sum(xs) versus reduce(lambda a, b: a + b, xs, 0)",
        "xs[::-1] versus list(reversed(xs))",
        "s.split() versus s.split(' ')",
    ),
    "BEHAVIORS": (
        "reverses strings",
        "parses ISO dates",
        "computes running medians",
        "validates email addresses",
        "merges sorted lists",
    ),
    "ASSERT_FACTS": (
        "sorting [3, 1, 2] yields [1, 2, 3]",
        "the factorial of 5 is 120",
        "'abc'.upper() equals 'ABC'",
    ),
    "DEPENDENCIES": (
        "an HTTP client",
        "a database connection",
        "the system clock",
        "a file reader",
        "a payment gateway",
    ),
    "RECIPIENTS": (
        "my manager", "the support team", "my landlord",
        "the hiring committee", "a new client", "my professor",
    ),
    "PURPOSES": (
        "requesting a meeting",
        "asking for a deadline extension",
        "reporting a billing error",
        "declining an invitation politely",
        "requesting a refund",
    ),
    "SUBJECTS": (
        "a delayed shipment", "tomorrow's agenda", "an overdue invoice",
        "the broken printer", "the quarterly budget",
    ),
    "BLURBS": (
        "The council voted to expand the bike lane network downtown. "
        "Local shops worry it will remove parking.",
        "The plant opened a second shift after orders doubled. "
        "Hiring, however, is behind schedule.",
        "The library extended weekend hours for exam season. "
        "Students asked for quiet floors as well.",
    ),
    "REPORT_TOPICS": (
        "regional rainfall trends",
        "warehouse safety incidents",
        "customer churn drivers",
        "school lunch participation",
    ),
    "PRODUCTS": (
        "reusable water bottle", "folding bicycle",
        "solar lantern", "noise-damping headphones",
    ),
    "SENTS": (
        "The meeting was postponed until further notice.",
        "Attendance has grown steadily for three years.",
        "The recipe requires patience more than skill.",
    ),
    "CASUAL": (
        "hey, gonna be late, traffic is nuts",
        "cant make it today, feeling rough",
        "nice one, that fix worked",
    ),
    "JARGONY": (
        "The municipality ratified the fiscal ordinance.",
        "The protocol mandates biannual recalibration.",
        "Stakeholders must operationalize the directive.",
    ),
    "WORDY": (
        "In light of the fact that it was raining, the game was called off.",
        "It is important to note that the results are preliminary in nature.",
    ),
    "PASSIVE": (
        "The ball was thrown by the boy.",
        "The report was written by the intern.",
        "The song was performed by the choir.",
    ),
    "TYPO_SENTS": (
        "Their going to the store tomorow.",
        "The resturant servs good food.",
        "Its to late too change the plan now.",
    ),
    "PUNCT_SENTS": (
        "lets eat grandma",
        "the list needs milk eggs and bread",
        "wait did you see that",
    ),
    "MISSPELLED": (
        "The comittee reviewed the aplication.",
        "She recieved the package yesteday.",
        "The enviroment affects our helth.",
    ),
    "BAD_GRAMMAR": (
        "He don't know nothing about it.",
        "Them results was surprising.",
        "She have went home already.",
    ),
    "AWKWARD": (
        "The report, it was being made by the team slowly.",
        "There is many reasons for why this happens.",
    ),
    "REVIEWS": (
        "I love this product!",
        "This is the worst service ever.",
        "It works fine, nothing special.",
        "Absolutely fantastic experience!",
        "The quality exceeded my expectations.",
    ),
    "SARCASTIC": (
        "Oh great, another Monday.",
        "Wow, the printer jammed again, what a surprise.",
        "Sure, because meetings always fix everything.",
    ),
    "EMOTIONAL": (
        "I can't believe they cancelled my flight again!",
        "Finally got the keys to my first apartment!",
        "I miss how things used to be.",
    ),
    "WORK_MSGS": (
        "Per my last email, the deadline was Friday.",
        "Happy to help whenever you have time.",
        "We need this fixed before the demo, no excuses.",
    ),
    "SERIES": (
        "10, 12, 15, 19, 24",
        "100, 96, 91, 85, 78",
        "40, 42, 41, 43, 42",
        "3, 6, 12, 24, 48",
    ),
    "SEASONAL": (
        "8, 14, 8, 15, 9, 14",
        "20, 31, 21, 30, 19, 32",
        "5, 5, 11, 5, 6, 12",
    ),
    "PEAKED": (
        "2, 9, 27, 14, 6",
        "11, 35, 80, 42, 13",
        "7, 7, 7, 52, 8",
    ),
    "PROGRESSIONS": (
        "2, 4, 8, 16",
        "1, 4, 9, 16, 25",
        "5, 10, 15, 20",
        "81, 27, 9, 3",
    ),
    "OUTLIERS": (
        "12, 14, 13, 98, 15",
        "3.1, 3.0, 3.2, 11.9, 2.9",
        "240, 250, 245, 12, 255",
    ),
    "ANOMALY_LOGS": (
        "temp 21.0, 21.3, 20.8, 35.9, 21.1",
        "latency 40ms, 42ms, 39ms, 900ms, 41ms",
    ),
    "ODD_LISTS": (
        "apple, banana, carrot, cherry",
        "oak, maple, granite, willow",
        "violin, cello, trumpet, viola",
    ),
    "CORRUPT_RECORDS": (
        "age 34, age 29, age -5, age 41",
        "height 170cm, 165cm, 1800cm, 172cm",
    ),
    "RANGE_VALS": (
        "55, 101, 72, -3, 88",
        "14, 99, 100, 123, 0",
    ),
    "PAIRED_SERIES": (
        "X = 1, 2, 3, 4 and Y = 2, 4, 6, 8",
        "X = 1, 2, 3, 4 and Y = 9, 7, 5, 3",
        "X = 1, 2, 3, 4 and Y = 5, 5, 5, 5",
    ),
    "CORR_CLAIMS": (
        "ice cream sales and sunburn rates rise together",
        "students with more absences score lower",
        "umbrella sales climb on rainy days",
    ),
    "ASSOC_PAIRS": (
        "shoe size and reading ability in children",
        "coffee intake and lines of code written",
    ),
    "LAG_SERIES": (
        "A = 1, 5, 9, 4 then B = 0, 1, 5, 9",
        "A = 2, 7, 3, 8 then B = 2, 2, 7, 3",
    ),
    "PASSAGES": (
        "The cat sat on the warm windowsill and watched the rain.",
        "Quantum decoherence renders macroscopic superpositions effectively unobservable.",
        "Turn the valve clockwise until snug, then back off a quarter turn.",
    ),
    "AUDIENCES": (
        "third graders", "busy executives", "new hires", "retired engineers",
    ),
    "PHRASES": (
        "Hello, how are you?",
        "Where is the train station?",
        "I would like a cup of coffee.",
        "See you tomorrow morning.",
        "The weather is nice today.",
        "Can you help me, please?",
    ),
    "GREETING_LINES": (
        "Good morning, team.",
        "Welcome back, everyone.",
        "Nice to meet you.",
    ),
    "MENU_ITEMS": (
        "grilled chicken with rice",
        "tomato soup with fresh bread",
        "spinach salad with walnuts",
    ),
    "SIGN_TEXTS": (
        "No parking between 8am and 6pm",
        "Please keep the door closed",
        "Staff only beyond this point",
    ),
    "IDIOMS": (
        "break the ice", "hit the road", "spill the beans", "under the weather",
    ),
    "QUESTIONS": (
        "What is the capital of France?",
        "How many days are in a leap year?",
        "Which planet is closest to the sun?",
        "What gas do plants absorb from the air?",
    ),
    "QUICK_FACTS": (
        "How many legs does a spider have?",
        "How many minutes are in a quarter hour?",
        "How many sides does a hexagon have?",
    ),
    "STORY_QS": (
        "'Ann fixed the fence while Ben watched.' Who fixed the fence?",
        "'Maya lent Tom her ladder on Sunday.' Who owns the ladder?",
        "'Ravi cooked dinner and Lena washed up.' Who washed up?",
    ),
    "WEEKDAYS": (
        "Monday", "Tuesday", "Wednesday", "Thursday", "Friday",
    ),
    "UNIT_QUESTIONS": (
        "minutes are in two hours",
        "grams are in three kilograms",
        "corners does a cube have",
        "weeks are in a standard year",
    ),
    "YESNO": (
        "is the Pacific larger than the Atlantic",
        "do penguins fly",
        "is zero an even number",
        "does sound travel faster than light",
    ),
    "TRUEFALSE": (
        "the Great Wall is visible from the Moon with the naked eye",
        "octopuses have three hearts",
        "lightning never strikes the same place twice",
    ),
    "CLAIMS": (
        "bats are blind",
        "goldfish have three-second memories",
        "honey never spoils",
    ),
    "POSSIBLES": (
        "a triangle has two right angles",
        "a year passes with no full moon",
        "water boils below 100 degrees Celsius on a mountain",
    ),
    "STATEMENT_PAIRS": (
        "'all the doors are locked' and 'the back door is open'",
        "'everyone passed the exam' and 'two students must retake it'",
    ),
    "MCQS": (
        "Which is a mammal? (a) shark (b) dolphin (c) trout",
        "Which is a prime number? (a) 9 (b) 15 (c) 13",
        "Which city is in Spain? (a) Porto (b) Seville (c) Lyon",
    ),
    "ODD_OPTIONS": (
        "(a) oak (b) maple (c) granite (d) willow",
        "(a) red (b) loud (c) blue (d) green",
    ),
    "RANK_SETS": (
        "for durability: (a) glass (b) steel (c) cardboard",
        "for portability: (a) desktop (b) tablet (c) mainframe",
    ),
    "TERMS": (
        "entropy", "liquidity", "habitat", "algorithm", "metaphor", "latency",
    ),
    "TERM_PAIRS": (
        "weather and climate",
        "speed and velocity",
        "accuracy and precision",
        "ethics and morals",
    ),
    "KV_RECORDS": (
        "name: Ada, age: 36, city: Lisbon",
        "product: kettle, price: 40, stock: 12",
        "title: Dune, year: 1965, pages: 412",
    ),
    "ITEM_LISTS": (
        "red, green, blue",
        "hammer, saw, drill",
        "oats, rice, beans",
    ),
    "FLAT_FIELDS": (
        "id: 7, name: Kim, role: admin",
        "sku: A12, qty: 3, bin: N4",
    ),
    "BROKEN_JSON": (
        "{'name': 'Ada', age: 36,}",
        '{"items": [1, 2, 3,], }',
        '{name: "Kim" role: admin}',
    ),
    "COMPACT_JSON": (
        '{"a":1,"b":[2,3]}',
        '{"user":{"id":7,"on":true}}',
    ),
    "MD_CONTENT": (
        "a title called Shopping List with items milk, eggs, and bread",
        "a warning note saying the API changes on Friday",
    ),
    "RECORD_ROWS": (
        "city and population: Oslo 700k, Bergen 290k",
        "name and score: Ida 92, Noa 85",
    ),
    "LINK_PAIRS": (
        "docs pointing to https://docs.example.com and status pointing to "
        "https://status.example.com",
        "the guide at https://guide.example.org and the blog at "
        "https://blog.example.org",
    ),
    "FENCE_SNIPS": (
        "print('hi')",
        "SELECT * FROM users;",
        "ls -la /tmp",
    ),
    "CSV_RECORDS": (
        "people with name, age, city: Ada 36 Lisbon and Kim 29 Oslo",
        "orders with id, item, qty: 7 bolts 40 and 9 nuts 12",
    ),
    "HEADERS": (
        "First Name, LAST NAME, E-Mail",
        "Order ID, Ship Date, Total Due",
    ),
    "TSV_SNIPS": (
        "name\tage; Ada\t36",
        "item\tqty; bolt\t40",
    ),
    "CSV_SNIPPETS": (
        "name,age,city with rows Ada,36,Lisbon and Kim,29,Oslo",
        "id,item,qty with rows 1,bolt,40 and 2,nut,7",
    ),
    "ESCAPE_ROWS": (
        'He said "hi", then left | 42',
        'Totals: 1,204 units | "approved"',
    ),
    "TABLE_RECORDS": (
        "id name qty: 1 bolt 40, 2 nut 7",
        "city temp: Oslo 4, Rome 19",
    ),
    "ROWS_TO_ALIGN": (
        "1 bolt 40 | 2 nut 7 | 11 washer 230",
        "ada 92 | kim 85 | noa 78",
    ),
    "PLAIN_TABLES": (
        "name age / Ada 36 / Kim 29",
        "item qty / bolt 40 / nut 7",
    ),
    "SMALL_TABLES": (
        "rows a b and c d",
        "rows 1 2 and 3 4",
    ),
    "TABLE_PAIRS": (
        "first: name qty with bolt 40; second: name qty with nut 7",
        "first: city temp with Oslo 4; second: city temp with Rome 19",
    ),
    "PLAIN_PHRASES": (
        "the quick brown fox jumps",
        "a tale of two cities",
        "war and peace in our time",
        "the art of computer programming",
    ),
    "IDENTIFIERS": (
        "getUserName", "TotalAmountDue", "parseHTTPResponse", "maxRetryCount",
    ),
    "USERNAMES": ("ana", "lee", "maria", "sam", "kim", "jo"),
    "NET_DOMAINS": (
        "example.com", "mail.example.org", "corp.example.net",
        "support.example.io",
    ),
    "URL_PATHS": ("docs", "help", "api", "guide", "blog"),
}


# ---------------------------------------------------------------------------
# Data model
# ---------------------------------------------------------------------------

Slot = tuple  # ("n1", "int", 2, 99) / ("d1", "dec", 2, 99) / ("x", "choice", "POOL")


@dataclass(frozen=True)
class QuerySpec:
    pattern: str
    slots: tuple[Slot, ...] = ()
    canonical: str | None = None
    canonical_params: dict = field(default_factory=dict)


@dataclass(frozen=True)
class Template:
    name: str
    capability: str
    query: QuerySpec

    @property
    def descriptor(self) -> str:
        return f"{self.name}: {self.capability}"


@dataclass(frozen=True)
class PolicyKit:
    """Per-category phrases assembled into policy texts.

    role: noun phrase for "You are a {role} assistant";
    inputs: what to read from the task; action: core verb phrase;
    output: what to return; checks: the validation to apply;
    failure: the condition that should stop execution.
    """

    role: str
    inputs: str
    action: str
    output: str
    checks: str
    failure: str


@dataclass(frozen=True)
class Category:
    domain: str
    name: str
    group_label: str
    group_description: str
    base: tuple[str, str]
    competitors: tuple[tuple[str, str], tuple[str, str]]
    templates: tuple[Template, ...]
    policy: PolicyKit


def _t(name, capability, pattern, slots=(), canonical=None, **canonical_params):
    return Template(
        name=name,
        capability=capability,
        query=QuerySpec(
            pattern=pattern,
            slots=tuple(slots),
            canonical=canonical,
            canonical_params=dict(canonical_params),
        ),
    )


def _int(name, lo=2, hi=99):
    return (name, "int", lo, hi)


def _dec(name, lo=2, hi=99):
    return (name, "dec", lo, hi)


def _pick(name, pool):
    return (name, "choice", pool)


# ---------------------------------------------------------------------------
# mathematics
# ---------------------------------------------------------------------------

_MATH = (
    Category(
        domain="mathematics",
        name="summation",
        group_label="Summation",
        group_description="Adding numbers together",
        base=("Calculate Sum", "Add all numbers together and return the total."),
        competitors=(
            ("Compute Total", "Compute the total by adding all values together."),
            ("Sum Numbers", "Sum up all the given numbers."),
        ),
        templates=(
            _t(
                "Calculate Sum",
                "Add all numbers together and return the total sum.",
                "What is the sum of {n1}, {n2}, and {n3}?",
                slots=(_int("n1"), _int("n2"), _int("n3")),
                canonical="What is the sum of 23, 45, and 67?",
                n1=23, n2=45, n3=67,
            ),
            _t(
                "Add Long List",
                "Add every number in a longer list and report one combined total.",
                "Add up these numbers: {n1}, {n2}, {n3}, {n4}, {n5}, {n6}.",
                slots=(_int("n1"), _int("n2"), _int("n3"), _int("n4"), _int("n5"), _int("n6")),
            ),
            _t(
                "Sum Decimals",
                "Add decimal amounts precisely and return the exact sum.",
                "What is the total of {d1}, {d2}, and {d3}?",
                slots=(_dec("d1"), _dec("d2"), _dec("d3")),
            ),
            _t(
                "Running Total",
                "Keep a running total over a sequence of additions and report the final figure.",
                "Start at {n1}, then add {n2} and then {n3}. What is the running total?",
                slots=(_int("n1"), _int("n2"), _int("n3")),
            ),
            _t(
                "Grand Total",
                "Combine several subtotals into one grand total.",
                "The subtotals are {n1}, {n2}, {n3}, and {n4}. What is the grand total?",
                slots=(_int("n1"), _int("n2"), _int("n3"), _int("n4")),
            ),
        ),
        policy=PolicyKit(
            role="numeric computation",
            inputs="every number stated in the task",
            action="add the values into one exact total",
            output="the final total",
            checks="confirm each stated number entered the addition exactly once",
            failure="any value is missing or not numeric",
        ),
    ),
    Category(
        domain="mathematics",
        name="averaging",
        group_label="Averaging",
        group_description="Computing mean values",
        base=("Calculate Average", "Work out the mean of the listed values."),
        competitors=(
            ("Compute Mean", "Work out the mean by averaging the listed values."),
            ("Average Values", "Average the listed values into one mean figure."),
        ),
        templates=(
            _t(
                "Calculate Average",
                "Compute the arithmetic mean of the given numbers.",
                "What is the average of {n1}, {n2}, {n3}, {n4}, {n5}?",
                slots=(_int("n1"), _int("n2"), _int("n3"), _int("n4"), _int("n5")),
                canonical="What is the average of 10, 20, 30, 40, 50?",
                n1=10, n2=20, n3=30, n4=40, n5=50,
            ),
            _t(
                "Mean of Pair",
                "Average exactly two values and return their midpoint.",
                "What number lies halfway between {n1} and {n2}?",
                slots=(_int("n1"), _int("n2")),
            ),
            _t(
                "Weighted Mean",
                "Compute a weighted average from values and integer weights.",
                "Scores {n1} and {n2} carry weights {w1} and {w2}. What is the weighted average?",
                slots=(_int("n1"), _int("n2"), _int("w1", 1, 9), _int("w2", 1, 9)),
            ),
            _t(
                "Average Rate",
                "Average a quantity over a time span to get a per-unit rate.",
                "A machine makes {n1} parts in {n2} hours. What is the average per hour?",
                slots=(_int("n1", 10, 99), _int("n2", 2, 9)),
            ),
            _t(
                "Median Value",
                "Find the middle value of an odd-length list of numbers.",
                "What is the median of {n1}, {n2}, {n3}, {n4}, {n5}?",
                slots=(_int("n1"), _int("n2"), _int("n3"), _int("n4"), _int("n5")),
            ),
        ),
        policy=PolicyKit(
            role="numeric computation",
            inputs="the numbers the task supplies",
            action="average the values into one central figure",
            output="the computed mean",
            checks="recount the values so the divisor matches how many were given",
            failure="fewer than two usable numbers are present",
        ),
    ),
    Category(
        domain="mathematics",
        name="percentage",
        group_label="Percentages",
        group_description="Computing percentage relationships",
        base=("Calculate Percentage", "Express one quantity as a percent share of another."),
        competitors=(
            ("Percentage Calculator", "Work the percent share one quantity takes of another."),
            ("Find Percent", "Express what percent share one quantity holds of another."),
        ),
        templates=(
            _t(
                "Calculate Percentage",
                "Compute what percentage one number is of another.",
                "What is {n1}% of {n2}?",
                slots=(_int("n1", 1, 99), _int("n2", 10, 400)),
                canonical="What is 25% of 200?",
                n1=25, n2=200,
            ),
            _t(
                "Percent Change",
                "Compute the percentage increase or decrease between two values.",
                "A price went from {n1} to {n2} dollars. What is the percentage change?",
                slots=(_int("n1", 10, 99), _int("n2", 10, 99)),
            ),
            _t(
                "Fraction to Percent",
                "Convert a fraction into its percentage representation.",
                "Express {n1}/{n2} as a percentage.",
                slots=(_int("n1", 1, 19), _int("n2", 20, 50)),
            ),
            _t(
                "Discount Price",
                "Apply a percentage discount to a price and return the new amount.",
                "An item costs {n1} dollars with a {n2}% discount. What is the final price?",
                slots=(_int("n1", 10, 99), _int("n2", 5, 90)),
            ),
            _t(
                "Percent of Total",
                "Determine what percent a part is of its whole.",
                "Out of {n2} students, {n1} passed. What percent passed?",
                slots=(_int("n1", 1, 50), _int("n2", 50, 99)),
            ),
        ),
        policy=PolicyKit(
            role="numeric computation",
            inputs="the part and whole amounts in the task",
            action="relate the quantities as an exact percentage",
            output="the percentage figure",
            checks="verify which number plays the part and which the whole",
            failure="the whole amount is zero or absent",
        ),
    ),
    Category(
        domain="mathematics",
        name="rounding",
        group_label="Rounding",
        group_description="Rounding numeric values",
        base=("Round Number", "Round the given numeric value to the requested precision."),
        competitors=(
            ("Number Rounder", "Round the numeric value given to the precision requested."),
            ("Apply Rounding", "Apply rounding to the given numeric value at the requested precision."),
        ),
        templates=(
            _t(
                "Round to Integer",
                "Round the given value to the nearest whole number.",
                "Round {d1} to the nearest whole number.",
                slots=(_dec("d1"),),
            ),
            _t(
                "Round to Tenths",
                "Round a decimal to one decimal place.",
                "Round {d2} to one decimal place.",
                slots=(("d2", "dec2", 2, 99),),
            ),
            _t(
                "Round to Tens",
                "Round a value to the nearest multiple of ten.",
                "Round {n1} to the nearest ten.",
                slots=(_int("n1", 11, 999),),
            ),
            _t(
                "Ceiling Value",
                "Round a value up to the next integer regardless of its fraction.",
                "What is {d1} rounded up to the next whole number?",
                slots=(_dec("d1"),),
            ),
            _t(
                "Floor Value",
                "Round a value down to the previous integer regardless of its fraction.",
                "What is {d1} rounded down to the previous whole number?",
                slots=(_dec("d1"),),
            ),
        ),
        policy=PolicyKit(
            role="numeric computation",
            inputs="the value and the precision the task names",
            action="round the value to exactly that precision",
            output="the rounded value",
            checks="confirm the rounding direction the task implies",
            failure="no precision can be inferred from the task",
        ),
    ),
    Category(
        domain="mathematics",
        name="comparison",
        group_label="Number Comparison",
        group_description="Comparing numeric values",
        base=("Compare Numbers", "State which of the supplied figures is bigger."),
        competitors=(
            ("Value Comparator", "State the bigger of the supplied figures."),
            ("Judge Larger", "Judge which supplied figure comes out bigger."),
        ),
        templates=(
            _t(
                "Larger of Two",
                "Decide which of two numbers is larger.",
                "Which is larger, {n1} or {n2}?",
                slots=(_int("n1"), _int("n2")),
            ),
            _t(
                "Find Maximum",
                "Find the largest value in a list of numbers.",
                "What is the largest of {n1}, {n2}, {n3}, and {n4}?",
                slots=(_int("n1"), _int("n2"), _int("n3"), _int("n4")),
            ),
            _t(
                "Find Minimum",
                "Find the smallest value in a list of numbers.",
                "What is the smallest of {n1}, {n2}, {n3}, and {n4}?",
                slots=(_int("n1"), _int("n2"), _int("n3"), _int("n4")),
            ),
            _t(
                "Order Values",
                "Sort a short list of numbers from smallest to largest.",
                "Sort these numbers in ascending order: {n1}, {n2}, {n3}, {n4}.",
                slots=(_int("n1"), _int("n2"), _int("n3"), _int("n4")),
            ),
            _t(
                "Within Range",
                "Check whether a value falls inside a closed numeric range.",
                "Is {n1} between {n2} and {n3}?",
                slots=(_int("n1"), _int("n2", 1, 40), _int("n3", 41, 99)),
            ),
        ),
        policy=PolicyKit(
            role="numeric computation",
            inputs="the numbers being compared in the task",
            action="compare the values and settle their order",
            output="the comparison verdict",
            checks="re-read each value so no digit is transposed",
            failure="the values cannot be interpreted as numbers",
        ),
    ),
)

# ---------------------------------------------------------------------------
# coding
# ---------------------------------------------------------------------------

_CODING = (
    Category(
        domain="coding",
        name="function_writing",
        group_label="Function Writing",
        group_description="Writing Python functions",
        base=("Write Python Function", "Write a Python function implementing the requested behavior."),
        competitors=(
            ("Create Function", "Create a Python function that implements the requested behavior."),
            ("Build Function", "Build the requested Python function with the behavior described."),
        ),
        templates=(
            _t(
                "Write Python Function",
                "Write a Python function that implements the specified functionality.",
                "Write a Python function to {goal}.",
                slots=(_pick("goal", "GOALS"),),
                canonical="Write a Python function to reverse a string.",
                goal="reverse a string",
            ),
            _t(
                "Write Helper Script",
                "Write a short standalone script for a small automation chore.",
                "Write a short Python script to {chore}.",
                slots=(_pick("chore", "CHORES"),),
            ),
            _t(
                "Implement Class",
                "Implement a small Python class with the described behavior.",
                "Implement a Python class that models a {thing}.",
                slots=(_pick("thing", "CLASS_THINGS"),),
            ),
            _t(
                "Write Lambda",
                "Express a tiny transformation as a one-line Python lambda.",
                "Write a Python lambda that {tiny}.",
                slots=(_pick("tiny", "LAMBDA_TASKS"),),
            ),
            _t(
                "Complete Function",
                "Fill in the body of a partially written function to match its name.",
                "Complete this function: def {fname}(x): ...",
                slots=(_pick("fname", "FUNC_STUBS"),),
            ),
        ),
        policy=PolicyKit(
            role="software development",
            inputs="the behavior the task asks the code to have",
            action="write clean working Python that does exactly that",
            output="the finished code",
            checks="walk through one example input to confirm the logic",
            failure="the requested behavior is contradictory or undefined",
        ),
    ),
    Category(
        domain="coding",
        name="debugging",
        group_label="Debugging",
        group_description="Finding and fixing code bugs",
        base=("Debug Code", "Track down the broken logic and patch it."),
        competitors=(
            ("Fix Bugs", "Track the broken logic down and patch each bug."),
            ("Repair Code", "Patch the broken logic found in the program."),
        ),
        templates=(
            _t(
                "Debug Code",
                "Find and fix bugs in the provided code snippet.",
                "Debug this code: {snippet}",
                slots=(_pick("snippet", "BUGGY"),),
                canonical="Debug this code: def add(a,b): return a-b",
                snippet="def add(a,b): return a-b",
            ),
            _t(
                "Explain Error",
                "Read a failing line of Python and point to its cause.",
                "Why does this fail: {snippet}",
                slots=(_pick("snippet", "ERRORY"),),
            ),
            _t(
                "Fix Off-by-One",
                "Spot and correct off-by-one mistakes in loops or indexing.",
                "Fix the off-by-one bug: {snippet}",
                slots=(_pick("snippet", "OFFBYONE"),),
            ),
            _t(
                "Trace Output",
                "Trace a short snippet by hand and give its printed output.",
                "What does this print: {snippet}",
                slots=(_pick("snippet", "TRACE_SNIPPETS"),),
            ),
            _t(
                "Add Missing Guard",
                "Add the missing guard for empty or missing values in a snippet.",
                "Add the missing guard: {snippet}",
                slots=(_pick("snippet", "GUARDLESS"),),
            ),
        ),
        policy=PolicyKit(
            role="software development",
            inputs="the code the task includes",
            action="locate the defect and correct it minimally",
            output="the corrected code",
            checks="re-run the failing case mentally against the fix",
            failure="the snippet is too incomplete to diagnose",
        ),
    ),
    Category(
        domain="coding",
        name="refactoring",
        group_label="Refactoring",
        group_description="Restructuring code without changing behavior",
        base=("Refactor Code", "Restructure the given code for clarity without changing its behavior."),
        competitors=(
            ("Clean Up Code", "Clean up the given code so it is clearer without changing behavior."),
            ("Tidy Code", "Tidy the structure of the given code without changing what it does."),
        ),
        templates=(
            _t(
                "Refactor Function",
                "Restructure working code to read clearly without changing behavior.",
                "Refactor this for clarity: {snippet}",
                slots=(_pick("snippet", "UGLY_CODE"),),
            ),
            _t(
                "Rename Variables",
                "Rename cryptic identifiers to descriptive names.",
                "Improve the names in: {snippet}",
                slots=(_pick("snippet", "RENAME_SNIPS"),),
            ),
            _t(
                "Extract Helper",
                "Pull repeated logic into a named helper function.",
                "Remove the duplication in: {snippet}",
                slots=(_pick("snippet", "DUP_SNIPS"),),
            ),
            _t(
                "Simplify Conditional",
                "Flatten a tangled conditional into simpler logic.",
                "Simplify this condition: {snippet}",
                slots=(_pick("snippet", "CONDS"),),
            ),
            _t(
                "Remove Dead Code",
                "Identify unreachable or useless code that can be deleted safely.",
                "Which part is dead code here: {snippet}",
                slots=(_pick("snippet", "DEADCODE"),),
            ),
        ),
        policy=PolicyKit(
            role="software development",
            inputs="the working code in the task",
            action="restructure it for clarity while preserving behavior",
            output="the restructured code",
            checks="compare old and new behavior on one concrete input",
            failure="the code's intended behavior cannot be determined",
        ),
    ),
    Category(
        domain="coding",
        name="code_explanation",
        group_label="Code Explanation",
        group_description="Explaining what code does",
        base=("Explain Code", "Explain in plain language what the given code does."),
        competitors=(
            ("Describe Code", "Describe what the given code does in plain language."),
            ("Interpret Code", "Interpret the given code and explain what it does."),
        ),
        templates=(
            _t(
                "Explain Snippet",
                "Explain what the given expression or snippet does in plain language.",
                "Explain what this does: {snippet}",
                slots=(_pick("snippet", "EXPLAIN_SNIPS"),),
            ),
            _t(
                "Summarize Function",
                "Summarize a function's purpose in one sentence.",
                "In one sentence, what does this function do: {snippet}",
                slots=(_pick("snippet", "ONE_LINERS"),),
            ),
            _t(
                "Document Parameters",
                "Describe what each parameter of the given function is for.",
                "Describe the parameters of: def {sig}",
                slots=(_pick("sig", "SIGNATURES"),),
            ),
            _t(
                "Name the Algorithm",
                "Name the classic algorithm a description corresponds to.",
                "Which algorithm is this: {snippet}",
                slots=(_pick("snippet", "ALGO_SNIPS"),),
            ),
            _t(
                "Compare Snippets",
                "Contrast two snippets and say whether they behave the same.",
                "Do these behave identically: {snippet}",
                slots=(_pick("snippet", "SNIPPET_PAIRS"),),
            ),
        ),
        policy=PolicyKit(
            role="software development",
            inputs="the code attached to the task",
            action="explain its behavior in plain language",
            output="the explanation",
            checks="tie every claim to a specific line or expression",
            failure="the code references context that was not provided",
        ),
    ),
    Category(
        domain="coding",
        name="test_writing",
        group_label="Test Writing",
        group_description="Writing tests for code",
        base=("Write Tests", "Write tests that cover the given code's behavior."),
        competitors=(
            ("Create Tests", "Create tests covering the behavior of the given code."),
            ("Author Tests", "Author tests for the given code and its behavior."),
        ),
        templates=(
            _t(
                "Write Unit Test",
                "Write a unit test covering the described behavior.",
                "Write a unit test for a function that {behavior}.",
                slots=(_pick("behavior", "BEHAVIORS"),),
            ),
            _t(
                "List Edge Cases",
                "List the edge cases a function's tests should cover.",
                "List edge cases for a function that {behavior}.",
                slots=(_pick("behavior", "BEHAVIORS"),),
            ),
            _t(
                "Write Assertion",
                "Turn a plain-language expectation into a single assert statement.",
                "Write an assert for: {fact}",
                slots=(_pick("fact", "ASSERT_FACTS"),),
            ),
            _t(
                "Mock Dependency",
                "Sketch how to isolate an external dependency in a test.",
                "How would you mock {dep} in a test?",
                slots=(_pick("dep", "DEPENDENCIES"),),
            ),
            _t(
                "Propose Property Test",
                "Propose an invariant-style test for the described function.",
                "Propose a property test for a function that {behavior}.",
                slots=(_pick("behavior", "BEHAVIORS"),),
            ),
        ),
        policy=PolicyKit(
            role="software development",
            inputs="the behavior under test from the task",
            action="design tests that pin that behavior down",
            output="the test code or test list",
            checks="make sure at least one test fails if the behavior breaks",
            failure="the behavior under test is not stated",
        ),
    ),
)

# ---------------------------------------------------------------------------
# writing
# ---------------------------------------------------------------------------

_WRITING = (
    Category(
        domain="writing",
        name="email_writing",
        group_label="Email Writing",
        group_description="Composing emails",
        base=("Write Email", "Compose a professional email."),
        competitors=(
            ("Compose Email", "Compose an email message."),
            ("Draft Email", "Draft an email for the given purpose."),
        ),
        templates=(
            _t(
                "Write Email",
                "Compose a professional email based on the given requirements.",
                "Write an email to {recipient} {purpose}.",
                slots=(_pick("recipient", "RECIPIENTS"), _pick("purpose", "PURPOSES")),
                canonical="Write an email to my manager requesting a meeting.",
                recipient="my manager", purpose="requesting a meeting",
            ),
            _t(
                "Reply to Email",
                "Draft a courteous reply to a received email.",
                "Draft a reply to {recipient} about {subject}.",
                slots=(_pick("recipient", "RECIPIENTS"), _pick("subject", "SUBJECTS")),
            ),
            _t(
                "Follow-up Email",
                "Write a brief follow-up nudging for a response.",
                "Write a follow-up email about {subject} sent last week.",
                slots=(_pick("subject", "SUBJECTS"),),
            ),
            _t(
                "Cold Outreach",
                "Write a concise first-contact email to someone new.",
                "Write a cold outreach email to {recipient} about {subject}.",
                slots=(_pick("recipient", "RECIPIENTS"), _pick("subject", "SUBJECTS")),
            ),
            _t(
                "Meeting Invite",
                "Write a short email inviting people to a meeting with time and agenda.",
                "Invite the team to a {n1}-minute meeting about {subject}.",
                slots=(_int("n1", 15, 90), _pick("subject", "SUBJECTS")),
            ),
        ),
        policy=PolicyKit(
            role="professional writing",
            inputs="the recipient and purpose stated in the task",
            action="compose a courteous purposeful email",
            output="the finished email",
            checks="confirm the tone fits the recipient and the ask is explicit",
            failure="the purpose of the email is missing",
        ),
    ),
    Category(
        domain="writing",
        name="summarization",
        group_label="Summarization",
        group_description="Condensing text into summaries",
        base=("Write Summary", "Write a concise summary of the given text."),
        competitors=(
            ("Summarize Text", "Summarize the given text into a concise version."),
            ("Condense Text", "Condense the given text into a concise summary."),
        ),
        templates=(
            _t(
                "Write Summary",
                "Create a concise summary of the provided text.",
                "Summarize the following article: {text}",
                slots=(_pick("text", "BLURBS"),),
                canonical="Summarize the following article: [text]",
                text="[text]",
            ),
            _t(
                "One-line TLDR",
                "Compress a paragraph into a single line.",
                "Give a one-line summary of: {text}",
                slots=(_pick("text", "BLURBS"),),
            ),
            _t(
                "Bullet Summary",
                "Summarize content as three short bullets.",
                "Summarize in three bullets: {text}",
                slots=(_pick("text", "BLURBS"),),
            ),
            _t(
                "Abstract Writer",
                "Write a formal two-sentence abstract for a longer document.",
                "Write a two-sentence abstract for a report on {topic}.",
                slots=(_pick("topic", "REPORT_TOPICS"),),
            ),
            _t(
                "Key Takeaways",
                "Extract the main takeaways a busy reader needs.",
                "What are the key takeaways of: {text}",
                slots=(_pick("text", "BLURBS"),),
            ),
        ),
        policy=PolicyKit(
            role="professional writing",
            inputs="the source text included in the task",
            action="condense it faithfully to its core points",
            output="the summary",
            checks="drop nothing essential and add nothing new",
            failure="no source text was actually provided",
        ),
    ),
    Category(
        domain="writing",
        name="headline_writing",
        group_label="Headline Writing",
        group_description="Writing headlines and titles",
        base=("Write Headline", "Cap the story with one sharp accurate line."),
        competitors=(
            ("Create Headline", "Cap the story using one sharp line that fits."),
            ("Title Maker", "Produce one sharp line capping the story."),
        ),
        templates=(
            _t(
                "Write Headline",
                "Write a clear informative headline for the given story.",
                "Write a headline for this story: {text}",
                slots=(_pick("text", "BLURBS"),),
            ),
            _t(
                "Punchy Title",
                "Produce a short punchy title under eight words.",
                "Give a punchy title for an article about {topic}.",
                slots=(_pick("topic", "TOPICS"),),
            ),
            _t(
                "Subject Line",
                "Write an email subject line that earns the open.",
                "Write a subject line for an email about {subject}.",
                slots=(_pick("subject", "SUBJECTS"),),
            ),
            _t(
                "Section Heading",
                "Write an informative heading for a document section.",
                "Suggest a heading for a section covering {topic}.",
                slots=(_pick("topic", "REPORT_TOPICS"),),
            ),
            _t(
                "Write Slogan",
                "Coin a memorable slogan for a product or campaign.",
                "Write a slogan for a {product}.",
                slots=(_pick("product", "PRODUCTS"),),
            ),
        ),
        policy=PolicyKit(
            role="professional writing",
            inputs="the content the headline must represent",
            action="distill it into one sharp line",
            output="the headline",
            checks="keep it accurate to the content and free of bait",
            failure="the content gives nothing concrete to headline",
        ),
    ),
    Category(
        domain="writing",
        name="paraphrasing",
        group_label="Paraphrasing",
        group_description="Restating text in other words",
        base=("Paraphrase Text", "Say the same thing again using fresh wording."),
        competitors=(
            ("Reword Text", "Say the original thing again in fresh words."),
            ("Rephrase Text", "Recast the same content using fresh wording."),
        ),
        templates=(
            _t(
                "Paraphrase Sentence",
                "Restate the given text in different words with the same meaning.",
                "Paraphrase: '{text}'",
                slots=(_pick("text", "SENTS"),),
            ),
            _t(
                "Formal Rewrite",
                "Rewrite casual text in a formal register.",
                "Make this formal: '{text}'",
                slots=(_pick("text", "CASUAL"),),
            ),
            _t(
                "Simplify Wording",
                "Rewrite text so a young reader can follow it.",
                "Rewrite for a ten-year-old: '{text}'",
                slots=(_pick("text", "JARGONY"),),
            ),
            _t(
                "Tighten Sentence",
                "Shorten a wordy sentence without losing meaning.",
                "Tighten this sentence: '{text}'",
                slots=(_pick("text", "WORDY"),),
            ),
            _t(
                "Activate Voice",
                "Convert passive-voice sentences into active voice.",
                "Make this active voice: '{text}'",
                slots=(_pick("text", "PASSIVE"),),
            ),
        ),
        policy=PolicyKit(
            role="professional writing",
            inputs="the sentence or passage in the task",
            action="recast it in fresh wording with identical meaning",
            output="the rewritten text",
            checks="compare meanings side by side for drift",
            failure="the original text is ambiguous beyond repair",
        ),
    ),
    Category(
        domain="writing",
        name="proofreading",
        group_label="Proofreading",
        group_description="Correcting writing errors",
        base=("Proofread Text", "Hunt down writing mistakes and repair each one."),
        competitors=(
            ("Copyedit Text", "Repair the writing mistakes found in the draft."),
            ("Correct Errors", "Hunt through the draft and repair its writing mistakes."),
        ),
        templates=(
            _t(
                "Proofread Text",
                "Correct grammar, spelling, and punctuation in the text.",
                "Proofread: '{text}'",
                slots=(_pick("text", "TYPO_SENTS"),),
            ),
            _t(
                "Fix Punctuation",
                "Fix only the punctuation of the given text.",
                "Fix the punctuation: '{text}'",
                slots=(_pick("text", "PUNCT_SENTS"),),
            ),
            _t(
                "Correct Spelling",
                "Find and correct the misspelled words.",
                "Correct the spelling: '{text}'",
                slots=(_pick("text", "MISSPELLED"),),
            ),
            _t(
                "Fix Grammar",
                "Point out grammatical errors and fix them.",
                "Fix the grammar: '{text}'",
                slots=(_pick("text", "BAD_GRAMMAR"),),
            ),
            _t(
                "Polish Style",
                "Smooth awkward phrasing while keeping the author's voice.",
                "Polish this sentence: '{text}'",
                slots=(_pick("text", "AWKWARD"),),
            ),
        ),
        policy=PolicyKit(
            role="professional writing",
            inputs="the flawed text in the task",
            action="correct its errors without rewriting its voice",
            output="the corrected text",
            checks="change only what is wrong and keep the rest verbatim",
            failure="the text is unreadable or missing",
        ),
    ),
)

# ---------------------------------------------------------------------------
# analysis
# ---------------------------------------------------------------------------

_ANALYSIS = (
    Category(
        domain="analysis",
        name="sentiment",
        group_label="Sentiment Analysis",
        group_description="Analyzing emotional tone",
        base=("Analyze Sentiment", "Determine the sentiment of the text."),
        competitors=(
            ("Sentiment Detector", "Detect the emotional tone."),
            ("Evaluate Sentiment", "Evaluate text sentiment."),
        ),
        templates=(
            _t(
                "Analyze Sentiment",
                "Determine the emotional tone (positive/negative/neutral) of the text.",
                "What is the sentiment of: '{text}'",
                slots=(_pick("text", "REVIEWS"),),
                canonical="What is the sentiment of: 'I love this product!'",
                text="I love this product!",
            ),
            _t(
                "Rate Review Stars",
                "Estimate a one-to-five star rating from review text.",
                "How many stars does this review suggest: '{text}'",
                slots=(_pick("text", "REVIEWS"),),
            ),
            _t(
                "Detect Sarcasm",
                "Judge whether a remark is sincere or sarcastic.",
                "Is this sincere or sarcastic: '{text}'",
                slots=(_pick("text", "SARCASTIC"),),
            ),
            _t(
                "Label Emotion",
                "Label the dominant emotion expressed in the text.",
                "Which emotion dominates: '{text}'",
                slots=(_pick("text", "EMOTIONAL"),),
            ),
            _t(
                "Classify Tone",
                "Classify the tone of a workplace message.",
                "Classify the tone of this message: '{text}'",
                slots=(_pick("text", "WORK_MSGS"),),
            ),
        ),
        policy=PolicyKit(
            role="text analysis",
            inputs="the passage quoted in the task",
            action="judge the feeling the words actually convey",
            output="the sentiment label",
            checks="weigh negations and sarcasm before labeling",
            failure="the passage is empty or purely factual",
        ),
    ),
    Category(
        domain="analysis",
        name="trend",
        group_label="Trend Analysis",
        group_description="Finding trends in data",
        base=("Analyze Trend", "Describe how the series of measurements moves over time."),
        competitors=(
            ("Trend Detector", "Describe the direction the measurement series moves in."),
            ("Find Trend", "Report which way the series of measurements is heading."),
        ),
        templates=(
            _t(
                "Analyze Trend",
                "Identify patterns and trends in the provided data.",
                "What is the trend in this series: {series}?",
                slots=(_pick("series", "SERIES"),),
            ),
            _t(
                "Growth or Decline",
                "Say whether a metric is growing, flat, or declining.",
                "Is this metric growing or declining: {series}?",
                slots=(_pick("series", "SERIES"),),
            ),
            _t(
                "Seasonal Pattern",
                "Spot repeating seasonal structure in data points.",
                "Is there a seasonal pattern here: {series}?",
                slots=(_pick("series", "SEASONAL"),),
            ),
            _t(
                "Locate Peak",
                "Locate the peak value in a series and where it occurs.",
                "Where is the peak in: {series}?",
                slots=(_pick("series", "PEAKED"),),
            ),
            _t(
                "Forecast Next",
                "Extrapolate the next value from a short series.",
                "What comes next in: {series}?",
                slots=(_pick("series", "PROGRESSIONS"),),
            ),
        ),
        policy=PolicyKit(
            role="data analysis",
            inputs="the data series written in the task",
            action="characterize how the values move over their order",
            output="the trend description",
            checks="scan the whole series before naming the pattern",
            failure="fewer than three points are available",
        ),
    ),
    Category(
        domain="analysis",
        name="outlier_detection",
        group_label="Outlier Detection",
        group_description="Finding values that do not fit",
        base=("Find Outliers", "Point at whichever values sit far from the rest."),
        competitors=(
            ("Detect Outliers", "Point out the values sitting far from the rest."),
            ("Spot Outliers", "Name the values that sit far away from the rest."),
        ),
        templates=(
            _t(
                "Find Outlier",
                "Identify the value that does not fit the rest of the data.",
                "Which value is the outlier: {vals}?",
                slots=(_pick("vals", "OUTLIERS"),),
            ),
            _t(
                "Flag Anomaly",
                "Flag the anomalous reading in a measurement log.",
                "Flag the anomaly: {vals}",
                slots=(_pick("vals", "ANOMALY_LOGS"),),
            ),
            _t(
                "Odd One Out",
                "Pick the item that does not belong in the list.",
                "Which does not belong: {vals}?",
                slots=(_pick("vals", "ODD_LISTS"),),
            ),
            _t(
                "Find Corrupt Record",
                "Detect an impossible or corrupted value in records.",
                "Find the corrupted record: {vals}",
                slots=(_pick("vals", "CORRUPT_RECORDS"),),
            ),
            _t(
                "Range Violations",
                "Find values falling outside the stated valid range.",
                "Which values violate the range 0 to 100: {vals}?",
                slots=(_pick("vals", "RANGE_VALS"),),
            ),
        ),
        policy=PolicyKit(
            role="data analysis",
            inputs="the listed values in the task",
            action="single out whatever breaks the pattern the rest set",
            output="the outlier and why it stands out",
            checks="compare each value against the bulk, not just neighbors",
            failure="the values show no coherent pattern at all",
        ),
    ),
    Category(
        domain="analysis",
        name="correlation",
        group_label="Correlation Analysis",
        group_description="Relating variables to each other",
        base=("Assess Correlation", "Assess how strongly the given variables are related."),
        competitors=(
            ("Measure Correlation", "Measure how strongly the given variables relate."),
            ("Relate Variables", "Relate the given variables and assess the strength of the link."),
        ),
        templates=(
            _t(
                "Joint Movement",
                "Judge whether two variables move together, oppositely, or not at all.",
                "Do these move together: {pair}?",
                slots=(_pick("pair", "PAIRED_SERIES"),),
            ),
            _t(
                "Cause or Correlate",
                "Distinguish plausible causation from mere correlation.",
                "Causation or correlation: {claim}?",
                slots=(_pick("claim", "CORR_CLAIMS"),),
            ),
            _t(
                "Strength of Link",
                "Rate the strength of association between paired measurements.",
                "How strong is the association: {pair}?",
                slots=(_pick("pair", "PAIRED_SERIES"),),
            ),
            _t(
                "Lagged Effect",
                "Detect whether one series follows another with a delay.",
                "Does the second series lag the first: {pair}?",
                slots=(_pick("pair", "LAG_SERIES"),),
            ),
            _t(
                "Suggest Confounder",
                "Suggest a confounding variable behind an association.",
                "What confounder could explain: {pair}?",
                slots=(_pick("pair", "ASSOC_PAIRS"),),
            ),
        ),
        policy=PolicyKit(
            role="data analysis",
            inputs="the paired observations in the task",
            action="judge how the two quantities move relative to each other",
            output="the association verdict",
            checks="consider whether a third factor could drive both",
            failure="only one variable's values are given",
        ),
    ),
    Category(
        domain="analysis",
        name="readability",
        group_label="Readability Analysis",
        group_description="Judging how easy text is to read",
        base=("Score Readability", "Score how easy the passage is to read through."),
        competitors=(
            ("Rate Readability", "Rate how easy the passage is to read through."),
            ("Readability Grader", "Grade how easily a reader moves through the passage."),
        ),
        templates=(
            _t(
                "Reading Level",
                "Estimate the reading level of the given passage.",
                "Estimate the reading level of: '{text}'",
                slots=(_pick("text", "PASSAGES"),),
            ),
            _t(
                "Clarity Score",
                "Rate how clear a passage is and name the muddiest part.",
                "Rate the clarity of: '{text}'",
                slots=(_pick("text", "PASSAGES"),),
            ),
            _t(
                "Jargon Density",
                "Measure how jargon-heavy a passage is.",
                "How jargon-heavy is this: '{text}'",
                slots=(_pick("text", "JARGONY"),),
            ),
            _t(
                "Sentence Length Check",
                "Report whether sentences run too long for easy reading.",
                "Are these sentences too long: '{text}'",
                slots=(_pick("text", "WORDY"),),
            ),
            _t(
                "Audience Fit",
                "Judge whether a passage suits its stated audience.",
                "Does this suit {audience}: '{text}'",
                slots=(_pick("audience", "AUDIENCES"), _pick("text", "PASSAGES")),
            ),
        ),
        policy=PolicyKit(
            role="text analysis",
            inputs="the passage and its intended reader",
            action="assess how much effort the text demands",
            output="the readability judgment",
            checks="point at the concrete wording that drives the score",
            failure="the passage is too short to judge",
        ),
    ),
)

# ---------------------------------------------------------------------------
# translation
# ---------------------------------------------------------------------------


def _translation_category(lang: str, subtype: str, base_cap: str,
                          comp1: tuple[str, str], comp2: tuple[str, str],
                          canonical: str | None = None) -> Category:
    return Category(
        domain="translation",
        name=subtype,
        group_label=f"{lang} Translation",
        group_description=f"Translating English into {lang}",
        base=(f"Translate to {lang}", base_cap),
        competitors=(comp1, comp2),
        templates=(
            _t(
                f"Translate to {lang}",
                f"Translate the given English text into {lang}.",
                f"Translate to {lang}: '{{text}}'",
                slots=(_pick("text", "PHRASES"),),
                canonical=canonical,
                **({"text": "Hello, how are you?"} if canonical else {}),
            ),
            _t(
                f"{lang} Greeting",
                f"Render a short English greeting in natural {lang}.",
                f"How would you say this greeting in {lang}: '{{text}}'",
                slots=(_pick("text", "GREETING_LINES"),),
            ),
            _t(
                f"Menu to {lang}",
                f"Translate a short menu item description into {lang}.",
                f"Translate this menu item to {lang}: '{{text}}'",
                slots=(_pick("text", "MENU_ITEMS"),),
            ),
            _t(
                f"Sign to {lang}",
                f"Translate a public sign or notice into {lang}.",
                f"Translate this sign to {lang}: '{{text}}'",
                slots=(_pick("text", "SIGN_TEXTS"),),
            ),
            _t(
                f"Idiom to {lang}",
                f"Convey an English idiom's meaning in {lang}.",
                f"Express this idiom in {lang}: '{{text}}'",
                slots=(_pick("text", "IDIOMS"),),
            ),
        ),
        policy=PolicyKit(
            role="translation",
            inputs="the English text quoted in the task",
            action=f"render it in natural fluent {lang}",
            output=f"the {lang} translation",
            checks="keep names, numbers, and punctuation intact",
            failure="the source text is not actually English",
        ),
    )


_TRANSLATION = (
    _translation_category(
        "Spanish", "spanish_translation",
        "Turn the supplied English wording into Spanish.",
        ("Spanish Translator", "Turn the supplied wording into Spanish text."),
        ("Render in Spanish", "Produce Spanish text for the supplied English wording."),
        canonical="Translate to Spanish: 'Hello, how are you?'",
    ),
    _translation_category(
        "French", "french_translation",
        "Recast the provided English passage as French prose.",
        ("French Translator", "Recast the provided passage into French prose."),
        ("Render in French", "Produce French prose from the provided English passage."),
    ),
    _translation_category(
        "German", "german_translation",
        "Convert the presented passage into everyday German.",
        ("German Translator", "Express the presented passage in everyday German."),
        ("Render in German", "Deliver an everyday German version of the presented passage."),
    ),
    _translation_category(
        "Italian", "italian_translation",
        "Carry the submitted phrase across into smooth Italian.",
        ("Italian Translator", "Carry the submitted phrase over into Italian."),
        ("Render in Italian", "Give a smooth Italian counterpart for the submitted phrase."),
    ),
    _translation_category(
        "Portuguese", "portuguese_translation",
        "Restate the quoted excerpt using natural Portuguese.",
        ("Portuguese Translator", "Restate the quoted excerpt in Portuguese."),
        ("Render in Portuguese", "Offer a natural Portuguese restatement of the quoted excerpt."),
    ),
)

# ---------------------------------------------------------------------------
# question-answering
# ---------------------------------------------------------------------------

_QA = (
    Category(
        domain="question-answering",
        name="direct_answer",
        group_label="Question Answering",
        group_description="Answering direct questions",
        base=("Answer Question", "Answer the given question directly."),
        competitors=(
            ("Provide Answer", "Provide the direct answer to the given question."),
            ("Respond to Question", "Respond to the given question with the direct answer."),
        ),
        templates=(
            _t(
                "Answer Question",
                "Provide a direct answer to the given question.",
                "Answer this question: {q}",
                slots=(_pick("q", "QUESTIONS"),),
            ),
            _t(
                "Short Fact",
                "Give the single fact a question asks for, nothing else.",
                "In one word or number: {q}",
                slots=(_pick("q", "QUICK_FACTS"),),
            ),
            _t(
                "Who Did It",
                "Answer who performed an action in a one-line story.",
                "Answer from the story: {q}",
                slots=(_pick("q", "STORY_QS"),),
            ),
            _t(
                "Day Arithmetic",
                "Answer simple questions about days of the week.",
                "What day comes after {day}?",
                slots=(_pick("day", "WEEKDAYS"),),
            ),
            _t(
                "Quantity Question",
                "Answer how-many questions with a number.",
                "How many {q}?",
                slots=(_pick("q", "UNIT_QUESTIONS"),),
            ),
        ),
        policy=PolicyKit(
            role="question answering",
            inputs="the question posed by the task",
            action="answer it directly from what is asked",
            output="the direct answer",
            checks="answer the question asked, not a nearby one",
            failure="the question is unanswerable as posed",
        ),
    ),
    Category(
        domain="question-answering",
        name="concept_explanation",
        group_label="Concept Explanation",
        group_description="Explaining concepts simply",
        base=("Explain Concept", "Explain the given concept in simple terms."),
        competitors=(
            ("Clarify Concept", "Clarify the given concept in terms that are simple."),
            ("Concept Explainer", "Explain the concept given using simple terms."),
        ),
        templates=(
            _t(
                "Explain Concept",
                "Explain the given concept in clear, simple terms.",
                "Explain the concept of {topic} in simple terms.",
                slots=(_pick("topic", "TOPICS"),),
            ),
            _t(
                "Explain Like Five",
                "Explain a concept as if to a five-year-old.",
                "Explain {topic} to a five-year-old.",
                slots=(_pick("topic", "TOPICS"),),
            ),
            _t(
                "Make an Analogy",
                "Explain a concept through a concrete analogy.",
                "Give an analogy for {topic}.",
                slots=(_pick("topic", "TOPICS"),),
            ),
            _t(
                "Why It Matters",
                "Explain why a concept matters in practice.",
                "Why does {topic} matter in everyday life?",
                slots=(_pick("topic", "TOPICS"),),
            ),
            _t(
                "Common Misconception",
                "Correct a common misconception about a concept.",
                "What do people commonly get wrong about {topic}?",
                slots=(_pick("topic", "TOPICS"),),
            ),
        ),
        policy=PolicyKit(
            role="question answering",
            inputs="the concept named in the task",
            action="explain it plainly for a non-expert",
            output="the explanation",
            checks="replace every technical term with an everyday one",
            failure="the concept named is not a real concept",
        ),
    ),
    Category(
        domain="question-answering",
        name="yes_no",
        group_label="Yes-No Questions",
        group_description="Answering yes or no",
        base=("Answer Yes or No", "Settle the posed question with a plain yes or a plain no."),
        competitors=(
            ("Yes-No Decider", "Settle whether the posed question is a yes or a no."),
            ("Binary Answer", "Reply to the posed question with only yes or only no."),
        ),
        templates=(
            _t(
                "Yes or No",
                "Answer the question strictly with yes or no.",
                "Yes or no: {q}?",
                slots=(_pick("q", "YESNO"),),
            ),
            _t(
                "True or False",
                "Judge the statement true or false.",
                "True or false: {q}.",
                slots=(_pick("q", "TRUEFALSE"),),
            ),
            _t(
                "Fact Check",
                "Verify a common claim and answer whether it holds.",
                "Does this claim hold: {q}?",
                slots=(_pick("q", "CLAIMS"),),
            ),
            _t(
                "Possibility Check",
                "Say whether the described situation is possible.",
                "Is it possible that {q}?",
                slots=(_pick("q", "POSSIBLES"),),
            ),
            _t(
                "Consistency Check",
                "Check whether two statements can both be true.",
                "Can both be true: {q}?",
                slots=(_pick("q", "STATEMENT_PAIRS"),),
            ),
        ),
        policy=PolicyKit(
            role="question answering",
            inputs="the proposition stated by the task",
            action="decide its truth and commit to yes or no",
            output="the yes-or-no verdict",
            checks="resist hedging; pick the better-supported side",
            failure="the proposition is genuinely undecidable",
        ),
    ),
    Category(
        domain="question-answering",
        name="multiple_choice",
        group_label="Multiple Choice",
        group_description="Choosing among given options",
        base=("Pick the Option", "Pick the correct option among the given choices."),
        competitors=(
            ("Option Selector", "Select the correct option from the choices given."),
            ("Choose Answer", "Choose the correct answer among the given options."),
        ),
        templates=(
            _t(
                "Pick Option",
                "Choose the correct option from the lettered choices.",
                "Choose one: {q}",
                slots=(_pick("q", "MCQS"),),
            ),
            _t(
                "Best Answer",
                "Select the best answer among the given candidates.",
                "Select the best answer: {q}",
                slots=(_pick("q", "MCQS"),),
            ),
            _t(
                "Eliminate Wrong",
                "Remove the clearly wrong options and state what remains.",
                "Eliminate the wrong options: {q}",
                slots=(_pick("q", "MCQS"),),
            ),
            _t(
                "Odd Option Out",
                "Identify the option that differs fundamentally from the others.",
                "Which option is unlike the others: {q}?",
                slots=(_pick("q", "ODD_OPTIONS"),),
            ),
            _t(
                "Rank Choices",
                "Rank the options from best to worst for the stated goal.",
                "Rank these options {q}.",
                slots=(_pick("q", "RANK_SETS"),),
            ),
        ),
        policy=PolicyKit(
            role="question answering",
            inputs="the options listed by the task",
            action="weigh each option against the question and pick",
            output="the chosen option letter",
            checks="rule out each rejected option for a stated reason",
            failure="none of the options fits the question",
        ),
    ),
    Category(
        domain="question-answering",
        name="definition",
        group_label="Definitions",
        group_description="Defining terms",
        base=("Define Term", "State the precise meaning the named term carries."),
        competitors=(
            ("Give Definition", "State precisely what meaning the named term carries."),
            ("Term Definer", "Spell out the precise meaning carried by the named term."),
        ),
        templates=(
            _t(
                "Define Term",
                "Give a precise definition of the given term.",
                "Define the term '{term}'.",
                slots=(_pick("term", "TERMS"),),
            ),
            _t(
                "Plain Definition",
                "Define a term in everyday language.",
                "In plain words, what is {term}?",
                slots=(_pick("term", "TERMS"),),
            ),
            _t(
                "Contrast Terms",
                "Define two related terms by contrasting them.",
                "What is the difference between {term}?",
                slots=(_pick("term", "TERM_PAIRS"),),
            ),
            _t(
                "Usage Example",
                "Define a term and use it in one example sentence.",
                "Define '{term}' and use it in a sentence.",
                slots=(_pick("term", "TERMS"),),
            ),
            _t(
                "Origin and Meaning",
                "Explain what a term means and where it comes from.",
                "What does '{term}' mean and what is its origin?",
                slots=(_pick("term", "TERMS"),),
            ),
        ),
        policy=PolicyKit(
            role="question answering",
            inputs="the term the task names",
            action="state what it means precisely and briefly",
            output="the definition",
            checks="avoid circularity; never define the term with itself",
            failure="the term has no established meaning",
        ),
    ),
)

# ---------------------------------------------------------------------------
# formatting
# ---------------------------------------------------------------------------

_FORMATTING = (
    Category(
        domain="formatting",
        name="json_conversion",
        group_label="JSON Conversion",
        group_description="Converting data to JSON",
        base=("Convert to JSON", "Convert the given data into JSON."),
        competitors=(
            ("JSON Converter", "Convert the data given into JSON form."),
            ("To JSON", "Emit the given data in valid JSON form."),
        ),
        templates=(
            _t(
                "Convert to JSON",
                "Convert the given data into JSON format.",
                "Convert this data to JSON: {data}",
                slots=(_pick("data", "KV_RECORDS"),),
            ),
            _t(
                "JSON Array Builder",
                "Wrap listed items into a JSON array.",
                "Put these items in a JSON array: {data}",
                slots=(_pick("data", "ITEM_LISTS"),),
            ),
            _t(
                "Nest JSON Fields",
                "Nest flat fields into the described JSON structure.",
                "Nest these fields under a 'record' key: {data}",
                slots=(_pick("data", "FLAT_FIELDS"),),
            ),
            _t(
                "Repair JSON",
                "Fix syntax errors so the text parses as JSON.",
                "Fix this JSON: {data}",
                slots=(_pick("data", "BROKEN_JSON"),),
            ),
            _t(
                "Pretty Print JSON",
                "Reformat compact JSON with readable indentation.",
                "Pretty print: {data}",
                slots=(_pick("data", "COMPACT_JSON"),),
            ),
        ),
        policy=PolicyKit(
            role="data formatting",
            inputs="the loose data the task provides",
            action="emit it as strictly valid JSON",
            output="the JSON text",
            checks="quote keys, match brackets, and drop trailing commas",
            failure="the data's structure cannot be inferred",
        ),
    ),
    Category(
        domain="formatting",
        name="markdown_formatting",
        group_label="Markdown Formatting",
        group_description="Formatting content as Markdown",
        base=("Format Markdown", "Mark the content up with Markdown syntax."),
        competitors=(
            ("Markdown Formatter", "Mark the supplied content up using Markdown syntax."),
            ("Render Markdown", "Apply Markdown syntax across the supplied content."),
        ),
        templates=(
            _t(
                "Format as Markdown",
                "Format the given content as Markdown.",
                "Format this content as Markdown: {data}",
                slots=(_pick("data", "MD_CONTENT"),),
            ),
            _t(
                "Markdown Table",
                "Lay out the given records as a Markdown table.",
                "Make a Markdown table from: {data}",
                slots=(_pick("data", "RECORD_ROWS"),),
            ),
            _t(
                "Bullet List Maker",
                "Turn the items into a Markdown bullet list.",
                "Turn this into a bullet list: {data}",
                slots=(_pick("data", "ITEM_LISTS"),),
            ),
            _t(
                "Add Markdown Links",
                "Convert name and URL pairs into Markdown links.",
                "Make Markdown links for: {data}",
                slots=(_pick("data", "LINK_PAIRS"),),
            ),
            _t(
                "Fence Code Block",
                "Wrap the snippet in a fenced code block with a language tag.",
                "Fence this snippet: {data}",
                slots=(_pick("data", "FENCE_SNIPS"),),
            ),
        ),
        policy=PolicyKit(
            role="data formatting",
            inputs="the content the task wants marked up",
            action="lay it out as clean Markdown",
            output="the Markdown text",
            checks="preview the structure mentally for broken syntax",
            failure="the content type has no Markdown equivalent",
        ),
    ),
    Category(
        domain="formatting",
        name="csv_conversion",
        group_label="CSV Conversion",
        group_description="Converting data to CSV",
        base=("Convert to CSV", "Lay the records out as comma separated rows."),
        competitors=(
            ("CSV Converter", "Lay out each record as a comma separated row."),
            ("To CSV", "Produce comma separated rows from the records."),
        ),
        templates=(
            _t(
                "Convert to CSV",
                "Convert the given records into CSV rows.",
                "Convert to CSV: {data}",
                slots=(_pick("data", "CSV_RECORDS"),),
            ),
            _t(
                "Normalize Headers",
                "Normalize CSV headers to lowercase snake_case.",
                "Normalize these headers: {data}",
                slots=(_pick("data", "HEADERS"),),
            ),
            _t(
                "TSV to CSV",
                "Convert tab-separated values into comma-separated form.",
                "Convert this TSV to CSV: {data}",
                slots=(_pick("data", "TSV_SNIPS"),),
            ),
            _t(
                "First Columns",
                "Keep only the first two columns of a CSV snippet.",
                "From this CSV keep the first two columns: {data}",
                slots=(_pick("data", "CSV_SNIPPETS"),),
            ),
            _t(
                "Escape CSV Row",
                "Quote and escape fields so the CSV row stays valid.",
                "Escape this row for CSV: {data}",
                slots=(_pick("data", "ESCAPE_ROWS"),),
            ),
        ),
        policy=PolicyKit(
            role="data formatting",
            inputs="the records named in the task",
            action="serialize them as valid CSV rows",
            output="the CSV text",
            checks="quote any field containing commas or quotes",
            failure="rows disagree on their number of fields",
        ),
    ),
    Category(
        domain="formatting",
        name="table_formatting",
        group_label="Table Formatting",
        group_description="Arranging data into tables",
        base=("Format Table", "Line the values up in neat rows and columns."),
        competitors=(
            ("Table Formatter", "Line values up neatly by rows and columns."),
            ("Build Table", "Set the values out in neat aligned rows."),
        ),
        templates=(
            _t(
                "Format Text Table",
                "Arrange the given data as an aligned text table.",
                "Format as a text table: {data}",
                slots=(_pick("data", "TABLE_RECORDS"),),
            ),
            _t(
                "Align Columns",
                "Align the columns of the given rows for readability.",
                "Align these rows: {data}",
                slots=(_pick("data", "ROWS_TO_ALIGN"),),
            ),
            _t(
                "Add Table Borders",
                "Add border characters around a plain table.",
                "Add borders to: {data}",
                slots=(_pick("data", "PLAIN_TABLES"),),
            ),
            _t(
                "Transpose Table",
                "Swap the rows and columns of a small table.",
                "Transpose this table: {data}",
                slots=(_pick("data", "SMALL_TABLES"),),
            ),
            _t(
                "Merge Tables",
                "Append two tables that share identical columns.",
                "Merge these tables: {data}",
                slots=(_pick("data", "TABLE_PAIRS"),),
            ),
        ),
        policy=PolicyKit(
            role="data formatting",
            inputs="the rows and columns in the task",
            action="arrange them into a tidy aligned table",
            output="the formatted table",
            checks="keep every row the same width as the header",
            failure="the data has no consistent column structure",
        ),
    ),
    Category(
        domain="formatting",
        name="case_conversion",
        group_label="Case Conversion",
        group_description="Changing text casing",
        base=("Convert Case", "Recase every word to match the wanted convention."),
        competitors=(
            ("Case Converter", "Recase each word so it matches the wanted convention."),
            ("Change Case", "Swap the casing of every word to the wanted convention."),
        ),
        templates=(
            _t(
                "Title Case",
                "Convert the given text to title case.",
                "Convert to title case: '{text}'",
                slots=(_pick("text", "PLAIN_PHRASES"),),
            ),
            _t(
                "Upper Case",
                "Convert the given text to upper case.",
                "Make this upper case: '{text}'",
                slots=(_pick("text", "PLAIN_PHRASES"),),
            ),
            _t(
                "Lower Case",
                "Convert the given text to lower case.",
                "Make this lower case: '{text}'",
                slots=(_pick("text", "PLAIN_PHRASES"),),
            ),
            _t(
                "Sentence Case",
                "Convert the given text to sentence case.",
                "Convert to sentence case: '{text}'",
                slots=(_pick("text", "PLAIN_PHRASES"),),
            ),
            _t(
                "Snake Case",
                "Convert the given identifier to snake_case.",
                "Convert to snake_case: '{text}'",
                slots=(_pick("text", "IDENTIFIERS"),),
            ),
        ),
        policy=PolicyKit(
            role="data formatting",
            inputs="the text and target casing from the task",
            action="recase every word to that convention",
            output="the recased text",
            checks="leave the words themselves and their order untouched",
            failure="no target casing is stated or implied",
        ),
    ),
)

# ---------------------------------------------------------------------------
# extraction
# ---------------------------------------------------------------------------

_EXTRACTION = (
    Category(
        domain="extraction",
        name="name_extraction",
        group_label="Name Extraction",
        group_description="Extracting names from text",
        base=("Extract Names", "Extract person names from text."),
        competitors=(
            ("Find Names", "Find all names in the text."),
            ("Name Extractor", "Extract names from content."),
        ),
        templates=(
            _t(
                "Extract Names",
                "Identify and extract all person names mentioned in the text.",
                "Extract names from: '{p1} met {p2} at the {place}.'",
                slots=(_pick("p1", "PEOPLE"), _pick("p2", "PEOPLE"), _pick("place", "PLACES")),
                canonical="Extract names from: 'John met Mary at the park.'",
                p1="John", p2="Mary", place="park",
            ),
            _t(
                "List People",
                "List every person mentioned in a notice.",
                "Who is mentioned: '{p1} will present, with {p2} taking notes.'",
                slots=(_pick("p1", "PEOPLE"), _pick("p2", "PEOPLE")),
            ),
            _t(
                "Guest Names",
                "Pull attendee names out of an RSVP note.",
                "List the guests: '{p1}, {p2}, and {p3} confirmed for dinner.'",
                slots=(_pick("p1", "PEOPLE"), _pick("p2", "PEOPLE"), _pick("p3", "PEOPLE")),
            ),
            _t(
                "Author Names",
                "Extract author names from a citation line.",
                "Extract the authors: '{p1} and {p2} (2019). On Widgets.'",
                slots=(_pick("p1", "PEOPLE"), _pick("p2", "PEOPLE")),
            ),
            _t(
                "Speaker Names",
                "Identify speakers named in meeting minutes.",
                "Who spoke: 'Minutes: {p1} opened; {p2} presented the budget.'",
                slots=(_pick("p1", "PEOPLE"), _pick("p2", "PEOPLE")),
            ),
        ),
        policy=PolicyKit(
            role="information extraction",
            inputs="the quoted text in the task",
            action="pull out every person name it mentions",
            output="the list of names",
            checks="keep names in order of appearance without duplicates",
            failure="the text mentions no people at all",
        ),
    ),
    Category(
        domain="extraction",
        name="date_extraction",
        group_label="Date Extraction",
        group_description="Extracting dates from text",
        base=("Extract Dates", "Pull the calendar dates out of the supplied passage."),
        competitors=(
            ("Find Dates", "Locate each calendar date the supplied passage contains."),
            ("Date Extractor", "Pull every calendar date from the passage."),
        ),
        templates=(
            _t(
                "Extract Dates",
                "Identify and extract all dates mentioned in the text.",
                "Extract dates from: '{event} on {month} {day}, {year}.'",
                slots=(
                    _pick("event", "EVENTS"), _pick("month", "MONTHS"),
                    _int("day", 1, 28), _int("year", 2020, 2026),
                ),
                canonical="Extract dates from: 'Meeting on Jan 15, 2024.'",
                event="Meeting", month="Jan", day=15, year=2024,
            ),
            _t(
                "Deadline Finder",
                "Find the deadline date stated in a message.",
                "When is the deadline: 'Submit everything by {month} {day}.'",
                slots=(_pick("month", "MONTHS"), _int("day", 1, 28)),
            ),
            _t(
                "Date Range",
                "Extract the start and end dates of a range.",
                "Extract the range: 'Open from {month} {day} to {month2} {day2}.'",
                slots=(
                    _pick("month", "MONTHS"), _int("day", 1, 28),
                    _pick("month2", "MONTHS"), _int("day2", 1, 28),
                ),
            ),
            _t(
                "Birthday Spotter",
                "Pull the birthday out of a profile line.",
                "Find the birthday: '{p1} was born on {month} {day}, {year}.'",
                slots=(
                    _pick("p1", "PEOPLE"), _pick("month", "MONTHS"),
                    _int("day", 1, 28), _int("year", 1950, 2010),
                ),
            ),
            _t(
                "Schedule Dates",
                "List every date in a short schedule.",
                "List the dates: 'Kickoff {month} {day}; demo {month2} {day2}.'",
                slots=(
                    _pick("month", "MONTHS"), _int("day", 1, 28),
                    _pick("month2", "MONTHS"), _int("day2", 1, 28),
                ),
            ),
        ),
        policy=PolicyKit(
            role="information extraction",
            inputs="the quoted message in the task",
            action="collect every date expression it contains",
            output="the list of dates",
            checks="normalize each date but keep its original meaning",
            failure="no date expression appears in the text",
        ),
    ),
    Category(
        domain="extraction",
        name="number_extraction",
        group_label="Number Extraction",
        group_description="Extracting numbers from text",
        base=("Extract Numbers", "Read off the numeric figures appearing in the snippet."),
        competitors=(
            ("Find Numbers", "List the numeric figures that appear in the snippet."),
            ("Number Extractor", "Read the snippet and list its numeric figures."),
        ),
        templates=(
            _t(
                "Extract Numbers",
                "Pull every numeric value out of the text.",
                "Extract the numbers: 'We sold {n1} units at {n2} dollars each.'",
                slots=(_int("n1"), _int("n2")),
            ),
            _t(
                "Amount Finder",
                "Find the monetary amounts mentioned.",
                "Find the amounts: 'Invoice total {n1} dollars, tax {n2} dollars.'",
                slots=(_int("n1", 100, 999), _int("n2", 5, 99)),
            ),
            _t(
                "Quantity Lister",
                "List the ordered quantities from the text.",
                "List quantities: 'Order: {n1} boxes, {n2} rolls, {n3} jars.'",
                slots=(_int("n1"), _int("n2"), _int("n3")),
            ),
            _t(
                "Percent Finder",
                "Extract the percentage figures mentioned.",
                "Find the percentages: 'Growth hit {n1}% after a {n2}% dip.'",
                slots=(_int("n1", 1, 99), _int("n2", 1, 99)),
            ),
            _t(
                "Measurement Reader",
                "Pull the measurements out of a description.",
                "Extract measurements: 'The room is {n1} by {n2} meters.'",
                slots=(_int("n1", 2, 20), _int("n2", 2, 20)),
            ),
        ),
        policy=PolicyKit(
            role="information extraction",
            inputs="the sentence quoted by the task",
            action="capture every numeric value it states",
            output="the list of numbers",
            checks="keep units attached where the text gives them",
            failure="the text contains no numeric values",
        ),
    ),
    Category(
        domain="extraction",
        name="email_extraction",
        group_label="Email Extraction",
        group_description="Extracting email addresses",
        base=("Extract Emails", "Copy out any mail addresses written inside the message."),
        competitors=(
            ("Find Emails", "Spot the mail addresses written inside the message."),
            ("Email Extractor", "Copy each mail address the message shows."),
        ),
        templates=(
            _t(
                "Extract Emails",
                "Find every email address in the text.",
                "Extract emails from: 'Contact {u1}@{d1} or {u2}@{d2}.'",
                slots=(
                    _pick("u1", "USERNAMES"), _pick("d1", "NET_DOMAINS"),
                    _pick("u2", "USERNAMES"), _pick("d2", "NET_DOMAINS"),
                ),
            ),
            _t(
                "Contact Scraper",
                "Pull the contact email out of a footer.",
                "Find the contact address: 'Questions? Write to {u1}@{d1}.'",
                slots=(_pick("u1", "USERNAMES"), _pick("d1", "NET_DOMAINS")),
            ),
            _t(
                "CC List Reader",
                "List the addresses on the CC line.",
                "List the CC addresses: 'CC: {u1}@{d1}, {u2}@{d2}.'",
                slots=(
                    _pick("u1", "USERNAMES"), _pick("d1", "NET_DOMAINS"),
                    _pick("u2", "USERNAMES"), _pick("d2", "NET_DOMAINS"),
                ),
            ),
            _t(
                "Sender Finder",
                "Identify the sender address in a header.",
                "Who sent this: 'From: {u1}@{d1} Subject: hello'?",
                slots=(_pick("u1", "USERNAMES"), _pick("d1", "NET_DOMAINS")),
            ),
            _t(
                "Support Address",
                "Spot the support email in a help page blurb.",
                "Find the support email: 'Reach support at {u1}@{d1} anytime.'",
                slots=(_pick("u1", "USERNAMES"), _pick("d1", "NET_DOMAINS")),
            ),
        ),
        policy=PolicyKit(
            role="information extraction",
            inputs="the text snippet in the task",
            action="lift out each email address exactly as written",
            output="the list of addresses",
            checks="preserve case and punctuation inside each address",
            failure="nothing in the text looks like an address",
        ),
    ),
    Category(
        domain="extraction",
        name="url_extraction",
        group_label="URL Extraction",
        group_description="Extracting web links",
        base=("Extract URLs", "Gather the hyperlinks present within the provided excerpt."),
        competitors=(
            ("Find URLs", "Gather each hyperlink present within the excerpt."),
            ("URL Extractor", "Collect the hyperlinks the provided excerpt holds."),
        ),
        templates=(
            _t(
                "Extract URLs",
                "Find every web link in the text.",
                "Extract the links: 'Docs at https://{d1}/{p1} and https://{d2}/{p2}.'",
                slots=(
                    _pick("d1", "NET_DOMAINS"), _pick("p1", "URL_PATHS"),
                    _pick("d2", "NET_DOMAINS"), _pick("p2", "URL_PATHS"),
                ),
            ),
            _t(
                "Homepage Finder",
                "Pull the homepage link from a bio.",
                "Find the homepage: 'More at https://{d1}.'",
                slots=(_pick("d1", "NET_DOMAINS"),),
            ),
            _t(
                "Link Lister",
                "List the URLs a message references.",
                "List the links in: 'See https://{d1}/{p1} first.'",
                slots=(_pick("d1", "NET_DOMAINS"), _pick("p1", "URL_PATHS")),
            ),
            _t(
                "Repo Link",
                "Extract the repository link from an announcement.",
                "Find the repo: 'Code lives at https://{d1}/{p1}.'",
                slots=(_pick("d1", "NET_DOMAINS"), _pick("p1", "URL_PATHS")),
            ),
            _t(
                "Image Source",
                "Extract the image URL from an HTML tag.",
                "Extract the src: '<img src=\"https://{d1}/{p1}.png\">'.",
                slots=(_pick("d1", "NET_DOMAINS"), _pick("p1", "URL_PATHS")),
            ),
        ),
        policy=PolicyKit(
            role="information extraction",
            inputs="the text the task quotes",
            action="collect each web link it contains verbatim",
            output="the list of links",
            checks="include the scheme and strip trailing punctuation",
            failure="no link-shaped token appears in the text",
        ),
    ),
)

# ---------------------------------------------------------------------------
# Assembled catalog
# ---------------------------------------------------------------------------

CATEGORIES: tuple[Category, ...] = (
    _MATH + _CODING + _WRITING + _ANALYSIS + _TRANSLATION + _QA + _FORMATTING + _EXTRACTION
)

CATEGORY_BY_NAME: dict[str, Category] = {c.name: c for c in CATEGORIES}

# (domain, category, template) triples in canonical catalog order.
ALL_TEMPLATES: tuple[tuple[str, Category, Template], ...] = tuple(
    (cat.domain, cat, tpl) for cat in CATEGORIES for tpl in cat.templates
)

TEMPLATE_BY_DESCRIPTOR: dict[str, tuple[Category, Template]] = {
    tpl.descriptor: (cat, tpl) for _, cat, tpl in ALL_TEMPLATES
}

TEMPLATES_BY_DOMAIN: dict[str, tuple[Template, ...]] = {
    domain: tuple(tpl for d, _, tpl in ALL_TEMPLATES if d == domain)
    for domain in DOMAINS
}
