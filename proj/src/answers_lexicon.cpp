#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "clozeforge/answers.hpp"
#include "lexicon.hpp"

namespace clozeforge::lex {

namespace {

using WordSet = std::unordered_set<std::string_view>;

const WordSet kDeterminers = {
    "the", "a", "an", "this", "that", "these", "those", "my", "your", "his", "her", "its", "our",
    "their", "some", "any", "each", "every", "no", "another", "both", "either", "neither", "such",
    "all", "most", "many", "few", "several", "various", "certain", "other"};

// Closed-class words that must never head or extend a noun chunk:
// prepositions, conjunctions, pronouns, common adverbs and particles.
const WordSet kFunctionWords = {
    // prepositions
    "of", "in", "to", "for", "with", "on", "at", "by", "from", "up", "about", "into", "over",
    "after", "beneath", "under", "above", "below", "between", "among", "through", "during",
    "before", "around", "against", "across", "behind", "beyond", "plus", "except", "but", "out",
    "off", "down", "near", "within", "without", "along", "beside", "besides", "despite", "towards",
    "toward", "upon", "onto", "amid", "via", "per", "unlike", "like", "until", "till", "since",
    // conjunctions and complementizers
    "and", "or", "nor", "so", "yet", "because", "although", "though", "while", "whereas", "if",
    "unless", "whether", "once", "when", "whenever", "where", "wherever", "that", "which", "who",
    "whom", "whose", "what", "why", "how", "as", "than",
    // pronouns
    "i", "you", "he", "she", "it", "we", "they", "me", "him", "us", "them", "myself", "yourself",
    "himself", "herself", "itself", "ourselves", "themselves", "mine", "yours", "hers", "ours",
    "theirs", "someone", "anyone", "everyone", "nobody", "somebody", "anybody", "everybody",
    "something", "anything", "everything", "nothing", "one", "oneself",
    // adverbs and particles common enough to matter
    "not", "n't", "never", "always", "often", "sometimes", "usually", "rarely", "seldom", "again",
    "ever", "still", "just", "also", "too", "very", "quite", "rather", "almost", "nearly", "only",
    "even", "already", "soon", "now", "then", "here", "there", "away", "back", "however",
    "therefore", "thus", "hence", "meanwhile", "moreover", "furthermore", "instead", "otherwise",
    "perhaps", "maybe", "indeed", "anyway", "else", "well", "much", "more", "less", "least", "far",
    "enough", "altogether", "together", "apart", "aside", "forth", "abroad", "ahead", "alone",
    "yes"};

// Common verb forms, with irregular pasts and participles spelled out.
const WordSet kVerbs = {
    "be", "am", "is", "are", "was", "were", "been", "being", "have", "has", "had", "having", "do",
    "does", "did", "done", "doing", "will", "would", "shall", "should", "can", "could", "may",
    "might", "must", "say", "says", "said", "saying", "go", "goes", "went", "gone", "going", "get",
    "gets", "got", "gotten", "getting", "make", "makes", "made", "making", "know", "knows", "knew",
    "known", "knowing", "think", "thinks", "thought", "thinking", "take", "takes", "took", "taken",
    "taking", "see", "sees", "saw", "seen", "seeing", "come", "comes", "came", "coming", "want",
    "wanted", "wants", "look", "looked", "looks", "looking", "use", "used", "uses", "using",
    "find", "finds", "found", "finding", "give", "gives", "gave", "given", "giving", "tell",
    "tells", "told", "telling", "work", "worked", "works", "working", "call", "called", "calls",
    "calling", "try", "tried", "tries", "trying", "ask", "asked", "asks", "asking", "need",
    "needed", "needs", "feel", "feels", "felt", "feeling", "become", "becomes", "became",
    "becoming", "leave", "leaves", "left", "leaving", "put", "puts", "putting", "mean", "means",
    "meant", "keep", "keeps", "kept", "keeping", "let", "lets", "begin", "begins", "began",
    "begun", "beginning", "seem", "seems", "seemed", "help", "helps", "helped", "helping", "talk",
    "talks", "talked", "talking", "turn", "turns", "turned", "turning", "start", "starts",
    "started", "starting", "show", "shows", "showed", "shown", "showing", "hear", "hears", "heard",
    "hearing", "play", "plays", "played", "playing", "run", "runs", "ran", "running", "move",
    "moves", "moved", "moving", "live", "lives", "lived", "living", "believe", "believes",
    "believed", "hold", "holds", "held", "holding", "bring", "brings", "brought", "bringing",
    "happen", "happens", "happened", "write", "writes", "wrote", "written", "writing", "provide",
    "provides", "provided", "sit", "sits", "sat", "sitting", "stand", "stands", "stood",
    "standing", "lose", "loses", "lost", "losing", "pay", "pays", "paid", "paying", "meet",
    "meets", "met", "meeting", "include", "includes", "included", "including", "continue",
    "continues", "continued", "set", "sets", "setting", "learn", "learns", "learned", "learnt",
    "change", "changes", "changed", "changing", "lead", "leads", "led", "leading", "understand",
    "understands", "understood", "watch", "watches", "watched", "follow", "follows", "followed",
    "stop", "stops", "stopped", "create", "creates", "created", "speak", "speaks", "spoke",
    "spoken", "read", "reads", "reading", "allow", "allows", "allowed", "add", "adds", "added",
    "spend", "spends", "spent", "grow", "grows", "grew", "grown", "open", "opens", "opened",
    "walk", "walks", "walked", "win", "wins", "won", "winning", "offer", "offers", "offered",
    "remember", "remembers", "remembered", "love", "loves", "loved", "consider", "considers",
    "considered", "appear", "appears", "appeared", "buy", "buys", "bought", "wait", "waits",
    "waited", "serve", "serves", "served", "die", "dies", "died", "send", "sends", "sent",
    "expect", "expects", "expected", "build", "builds", "built", "stay", "stays", "stayed",
    "fall", "falls", "fell", "fallen", "cut", "cuts", "reach", "reaches", "reached", "kill",
    "kills", "killed", "remain", "remains", "remained", "suggest", "suggests", "suggested",
    "raise", "raises", "raised", "pass", "passes", "passed", "sell", "sells", "sold", "require",
    "requires", "required", "report", "reports", "reported", "decide", "decides", "decided",
    "pull", "pulls", "pulled", "return", "returns", "returned", "explain", "explains",
    "explained", "hope", "hopes", "hoped", "develop", "develops", "developed", "carry", "carries",
    "carried", "break", "breaks", "broke", "broken", "receive", "receives", "received", "agree",
    "agrees", "agreed", "support", "supports", "supported", "hit", "hits", "produce", "produces",
    "produced", "eat", "eats", "ate", "eaten", "cover", "covers", "covered", "catch", "catches",
    "caught", "draw", "draws", "drew", "drawn", "choose", "chooses", "chose", "chosen", "wear",
    "wears", "wore", "worn", "fight", "fights", "fought", "throw", "throws", "threw", "thrown",
    "fly", "flies", "flew", "flown", "sing", "sings", "sang", "sung", "visit", "visits",
    "visited", "arrive", "arrives", "arrived", "defeat", "defeats", "defeated", "establish",
    "establishes", "established", "introduce", "introduces", "introduced", "found", "founded",
    "founds", "announce", "announces", "announced", "publish", "publishes", "published",
    "release", "releases", "released", "elect", "elects", "elected", "appoint", "appoints",
    "appointed", "sign", "signs", "signed", "join", "joins", "joined", "form", "forms", "formed",
    "complete", "completes", "completed", "finish", "finishes", "finished", "occur", "occurs",
    "occurred", "locate", "located", "situate", "situated", "name", "named", "names", "bear",
    "bears", "bore", "born", "borne", "marry", "marries", "married", "graduate", "graduates",
    "graduated", "study", "studies", "studied", "teach", "teaches", "taught", "travel", "travels",
    "travelled", "traveled", "design", "designs", "designed", "construct", "constructs",
    "constructed", "describe", "describes", "described", "feature", "features", "featured",
    "perform", "performs", "performed", "compose", "composes", "composed", "direct", "directs",
    "directed", "star", "stars", "starred", "host", "hosts", "hosted", "attend", "attends",
    "attended", "enter", "enters", "entered", "score", "scores", "scored", "beat", "beats",
    "beaten", "claim", "claims", "claimed", "dominate", "dominates", "dominated", "celebrate",
    "celebrates", "celebrated", "represent", "represents", "represented", "replace", "replaces",
    "replaced", "rename", "renamed", "renames", "measure", "measures", "measured", "contain",
    "contains", "contained", "consist", "consists", "consisted", "comprise", "comprises",
    "comprised", "border", "borders", "bordered", "flow", "flows", "flowed", "rise", "rises",
    "rose", "risen", "drop", "drops", "dropped", "increase", "increases", "increased", "decrease",
    "decreases", "decreased", "record", "records", "recorded", "launch", "launches", "launched",
    "manage", "manages", "managed", "operate", "operates", "operated", "close", "closes",
    "closed", "retire", "retires", "retired", "debut", "debuts", "debuted", "premiere",
    "premieres", "premiered"};

const WordSet kAdjectives = {
    "good",   "new",     "first",   "last",     "long",    "great",   "little",  "own",
    "old",    "right",   "big",     "high",     "small",   "large",   "young",   "early",
    "late",   "important", "public", "bad",     "same",    "able",    "quick",   "brown",
    "red",    "green",   "blue",    "white",    "black",   "yellow",  "major",   "minor",
    "local",  "national", "foreign", "main",    "common",  "popular", "famous",  "modern",
    "ancient", "former",  "current", "final",    "full",    "low",     "free",    "short",
    "top",    "best",    "worst",   "better",   "worse",   "larger",  "largest", "smaller",
    "smallest", "higher", "highest", "lower",    "lowest",  "longer",  "longest", "shorter",
    "shortest", "newer",  "newest",  "oldest",   "older",   "earlier", "earliest", "greater",
    "greatest", "northern", "southern", "eastern", "western", "central", "royal",  "average",
    "annual", "official", "original", "entire",  "whole",   "single",  "double",  "chief",
    "senior", "junior",  "prime",   "renowned", "notable", "rural",   "urban",   "wide",
    "deep",   "rich",    "poor",    "strong",   "weak",    "heavy",   "light",   "dark",
    "hot",    "cold",    "warm",    "cool",     "dry",     "wet",     "solo",    "live",
    "next",   "previous", "recent", "total",    "overall", "nearby",  "domestic", "human"};

const WordSet kNumberWords = {
    "zero", "one",  "two",  "three", "four", "five", "six", "seven", "eight", "nine", "ten",
    "eleven", "twelve", "thirteen", "fourteen", "fifteen", "sixteen", "seventeen", "eighteen",
    "nineteen", "twenty", "thirty", "forty", "fifty", "sixty", "seventy", "eighty", "ninety",
    "hundred", "thousand", "million", "billion", "trillion", "dozen"};

const WordSet kOrdinalWords = {"first",  "second", "third", "fourth", "fifth",  "sixth",
                               "seventh", "eighth", "ninth", "tenth",  "eleventh", "twelfth"};

const WordSet kIngNouns = {"morning",  "evening",  "thing",    "something", "anything", "nothing",
                           "everything", "king",   "ring",     "wing",      "spring",   "string",
                           "during",   "sibling",  "building", "wedding",   "ceiling",  "clothing",
                           "darling",  "duckling", "dumpling", "herring",   "lightning", "pudding",
                           "shilling", "sterling", "viking",   "bling"};

const WordSet kEdExceptions = {"hundred", "indeed", "sacred", "naked", "wicked", "rugged",
                               "crooked", "jagged", "ragged", "wretched", "beloved", "bed",
                               "red", "sled", "shed", "shred", "seed", "speed", "breed", "creed",
                               "greed", "steed", "reed", "feed", "deed", "need", "weed"};

const WordSet kCurrencyWords = {"dollar", "dollars", "pound", "pounds", "euro",  "euros",
                                "cent",   "cents",   "yen",   "francs", "franc", "usd",
                                "gbp",    "eur",     "rupee", "rupees", "pesos", "peso"};

const WordSet kMagnitudeWords = {"hundred", "thousand", "million", "billion", "trillion"};

const WordSet kMonths = {"January",  "February", "March",    "April",   "May",      "June",
                         "July",     "August",   "September", "October", "November", "December"};

// Given-name gazetteer backing the PERSON rule.
const WordSet kGivenNames = {
    "Aaron", "Adam", "Adrian", "Alan", "Albert", "Alex", "Alexander", "Alexandra", "Alfred",
    "Alice", "Amanda", "Amy", "Andrea", "Andrew", "Angela", "Ann", "Anna", "Anne", "Anthony",
    "Antonio", "Arthur", "Ashley", "Barbara", "Barry", "Benjamin", "Bernard", "Beth", "Betty",
    "Bill", "Billy", "Bob", "Bobby", "Bradley", "Brandon", "Brenda", "Brian", "Bruce", "Bryan",
    "Carl", "Carlos", "Carol", "Caroline", "Carolyn", "Catherine", "Cecilia", "Charles",
    "Charlotte", "Chris", "Christian", "Christina", "Christine", "Christopher", "Claire", "Clara",
    "Clarence", "Claude", "Colin", "Craig", "Cynthia", "Dale", "Dan", "Daniel", "Danny", "David",
    "Dean", "Deborah", "Debra", "Denis", "Dennis", "Derek", "Diana", "Diane", "Donald", "Donna",
    "Doris", "Dorothy", "Douglas", "Duncan", "Dylan", "Earl", "Edgar", "Edith", "Edward",
    "Edwin", "Eleanor", "Elizabeth", "Ellen", "Emily", "Emma", "Eric", "Ernest", "Ethan",
    "Eugene", "Eva", "Evelyn", "Felix", "Fiona", "Frances", "Francis", "Frank", "Franklin",
    "Fred", "Frederick", "Gabriel", "Gary", "George", "Gerald", "Gilbert", "Gloria", "Gordon",
    "Grace", "Graham", "Grant", "Gregory", "Hannah", "Harold", "Harry", "Heather", "Helen",
    "Henry", "Herbert", "Howard", "Hugh", "Ian", "Irene", "Isaac", "Isabel", "Jack", "Jacob",
    "James", "Jane", "Janet", "Jason", "Jean", "Jeffrey", "Jennifer", "Jeremy", "Jerome",
    "Jerry", "Jessica", "Jim", "Joan", "Joe", "John", "Johnny", "Jonathan", "Jordan", "Jose",
    "Joseph", "Joshua", "Joyce", "Juan", "Judith", "Julia", "Julian", "Julie", "Justin", "Karen",
    "Katherine", "Kathleen", "Keith", "Kelly", "Kenneth", "Kevin", "Kim", "Kyle", "Larry",
    "Laura", "Lauren", "Lawrence", "Leo", "Leon", "Leonard", "Lewis", "Lily", "Linda", "Lisa",
    "Lloyd", "Louis", "Louise", "Lucas", "Lucy", "Luis", "Luke", "Margaret", "Maria", "Marie",
    "Marion", "Mark", "Martha", "Martin", "Mary", "Matthew", "Maurice", "Max", "Megan",
    "Melissa", "Michael", "Michelle", "Mike", "Mildred", "Nancy", "Nathan", "Neil", "Nicholas",
    "Nicole", "Noah", "Norman", "Oliver", "Olivia", "Oscar", "Owen", "Pamela", "Patricia",
    "Patrick", "Paul", "Paula", "Pedro", "Peter", "Philip", "Phillip", "Rachel", "Ralph",
    "Randy", "Raymond", "Rebecca", "Richard", "Rita", "Robert", "Roger", "Roland", "Ronald",
    "Rose", "Roy", "Russell", "Ruth", "Ryan", "Sam", "Samantha", "Samuel", "Sandra", "Sara",
    "Sarah", "Scott", "Sean", "Sharon", "Shirley", "Sidney", "Simon", "Sophia", "Stanley",
    "Stephanie", "Stephen", "Steve", "Steven", "Stuart", "Susan", "Sylvia", "Teresa", "Terry",
    "Theodore", "Thomas", "Timothy", "Tom", "Tony", "Tracy", "Valentin", "Victor", "Victoria",
    "Vincent", "Virginia", "Walter", "Warren", "Wayne", "Wendy", "William", "Willie", "Zachary"};

// Place gazetteer backing the GPE rule; multi-token entries are matched
// against the capitalized run joined with single spaces.
const WordSet kPlaces = {
    "Afghanistan", "Africa", "Alabama", "Alaska", "Albania", "Algeria", "America", "Amsterdam",
    "Antarctica", "Argentina", "Arizona", "Arkansas", "Asia", "Athens", "Atlanta", "Australia",
    "Austria", "Baghdad", "Bangkok", "Bangladesh", "Barcelona", "Beijing", "Belgium", "Berlin",
    "Bolivia", "Boston", "Brazil", "Brisbane", "Britain", "Brooklyn", "Brussels", "Budapest",
    "Buenos Aires", "Bulgaria", "Cairo", "California", "Cambodia", "Canada", "Caribbean",
    "Chicago", "Chile", "China", "Cleveland", "Colombia", "Colorado", "Connecticut", "Copenhagen",
    "Croatia", "Cuba", "Cyprus", "Dallas", "Delaware", "Delhi", "Denmark", "Denver", "Detroit",
    "Dublin", "Ecuador", "Edinburgh", "Egypt", "England", "Ethiopia", "Europe", "Finland",
    "Florida", "France", "Geneva", "Georgia", "Germany", "Ghana", "Glasgow", "Greece",
    "Hamburg", "Hawaii", "Helsinki", "Holland", "Hollywood", "Hong Kong", "Houston", "Hungary",
    "Iceland", "Idaho", "Illinois", "India", "Indiana", "Indonesia", "Iowa", "Iran", "Iraq",
    "Ireland", "Israel", "Istanbul", "Italy", "Jakarta", "Jamaica", "Japan", "Jerusalem",
    "Jordan", "Kansas", "Kentucky", "Kenya", "Kiev", "Korea", "Kuwait", "Lebanon", "Libya",
    "Lisbon", "London", "Los Angeles", "Louisiana", "Lugo", "Luxembourg", "Madrid", "Maine",
    "Malaysia", "Manchester", "Manhattan", "Manila", "Maryland", "Massachusetts", "Melbourne",
    "Mexico", "Mexico City", "Miami", "Michigan", "Milan", "Minnesota", "Mississippi",
    "Missouri", "Montana", "Montreal", "Morocco", "Moscow", "Mumbai", "Munich", "Myanmar",
    "Nebraska", "Nepal", "Netherlands", "Nevada", "New Delhi", "New England", "New Hampshire",
    "New Jersey", "New Mexico", "New Orleans", "New York", "New York City", "New Zealand",
    "Nicaragua", "Nigeria", "North America", "North Carolina", "North Dakota", "North Korea",
    "Norway", "Ohio", "Oklahoma", "Ontario", "Oregon", "Oslo", "Ottawa", "Pakistan", "Panama",
    "Paraguay", "Paris", "Pennsylvania", "Peru", "Philadelphia", "Philippines", "Phoenix",
    "Pittsburgh", "Poland", "Portugal", "Prague", "Quebec", "Rome", "Romania", "Russia",
    "San Diego", "San Francisco", "San Salvador", "Scotland", "Seattle", "Seoul", "Serbia",
    "Shanghai", "Singapore", "Slovakia", "Slovenia", "Somalia", "South Africa", "South America",
    "South Carolina", "South Dakota", "South Korea", "Spain", "Stockholm", "Sudan", "Sweden",
    "Switzerland", "Sydney", "Syria", "Taiwan", "Tennessee", "Texas", "Thailand", "Tokyo",
    "Toronto", "Tunisia", "Turkey", "Uganda", "Ukraine", "United Kingdom", "United States",
    "Uruguay", "Utah", "Venezuela", "Venice", "Vermont", "Vienna", "Vietnam", "Virginia",
    "Wales", "Warsaw", "Washington", "Wellington", "Wisconsin", "Wyoming", "Yemen", "Zimbabwe",
    "Zurich"};

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

// Tries to reduce an inflected form to a base found in the verb lexicon.
bool verb_by_morphology(std::string_view w) {
  auto in_lex = [](std::string_view s) { return kVerbs.count(s) > 0; };
  std::string stem;
  if (ends_with(w, "ing") && w.size() > 5 && kIngNouns.count(w) == 0) {
    stem = std::string(w.substr(0, w.size() - 3));
    if (in_lex(stem) || in_lex(stem + "e")) return true;
    if (stem.size() > 2 && stem[stem.size() - 1] == stem[stem.size() - 2] &&
        in_lex(stem.substr(0, stem.size() - 1))) {
      return true;  // doubled consonant: stopping -> stop
    }
    return false;
  }
  if (ends_with(w, "ed") && w.size() > 4 && kEdExceptions.count(w) == 0) {
    stem = std::string(w.substr(0, w.size() - 2));
    if (in_lex(stem) || in_lex(stem + "e")) return true;
    if (stem.size() > 2 && stem[stem.size() - 1] == stem[stem.size() - 2] &&
        in_lex(stem.substr(0, stem.size() - 1))) {
      return true;
    }
    if (ends_with(stem, "i") && in_lex(std::string(stem.substr(0, stem.size() - 1)) + "y")) {
      return true;  // carried -> carry
    }
    return false;
  }
  if (ends_with(w, "s") && w.size() > 3 && !ends_with(w, "ss")) {
    stem = std::string(w.substr(0, w.size() - 1));
    if (in_lex(stem)) return true;
    if (ends_with(w, "es") && in_lex(std::string(w.substr(0, w.size() - 2)))) return true;
    if (ends_with(w, "ies") && in_lex(std::string(w.substr(0, w.size() - 3)) + "y")) return true;
  }
  return false;
}

}  // namespace

bool is_determiner(std::string_view lower) { return kDeterminers.count(lower) > 0; }

bool is_function_word(std::string_view lower) { return kFunctionWords.count(lower) > 0; }

bool is_verb_form(std::string_view lower) {
  return kVerbs.count(lower) > 0 || verb_by_morphology(lower);
}

bool is_adjective(std::string_view lower) {
  if (kAdjectives.count(lower) > 0) return true;
  if (lower.size() >= 5) {
    return ends_with(lower, "ous") || ends_with(lower, "ful") || ends_with(lower, "ive") ||
           ends_with(lower, "able") || ends_with(lower, "ible") || ends_with(lower, "ish") ||
           ends_with(lower, "less") || ends_with(lower, "ic");
  }
  return false;
}

bool is_number_word(std::string_view lower) { return kNumberWords.count(lower) > 0; }

bool is_ordinal_word(std::string_view lower) { return kOrdinalWords.count(lower) > 0; }

bool is_currency_word(std::string_view lower) { return kCurrencyWords.count(lower) > 0; }

bool is_magnitude_word(std::string_view lower) { return kMagnitudeWords.count(lower) > 0; }

bool is_given_name(std::string_view word) { return kGivenNames.count(word) > 0; }

bool is_place_name(std::string_view joined_run) { return kPlaces.count(joined_run) > 0; }

bool is_month_name(std::string_view word) { return kMonths.count(word) > 0; }

}  // namespace clozeforge::lex
