#include "teamform/text_pipeline.hpp"

#include <algorithm>
#include <array>

namespace teamform {

namespace {

bool is_word_byte(unsigned char c) {
  if (c >= 0x80) return true;  // multibyte UTF-8 stays inside the token
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

bool pure_number(std::string_view tok) {
  for (unsigned char c : tok) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

std::vector<std::string> tokenize_title(std::string_view title) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    if (cur.size() >= 2 && !pure_number(cur)) out.push_back(cur);
    cur.clear();
  };
  for (unsigned char c : title) {
    if (is_word_byte(c)) {
      cur.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a')
                                         : static_cast<char>(c));
    } else {
      flush();
    }
  }
  flush();
  return out;
}

namespace {

/// Suffix-stripping state over b[0..k]; the buffer may be longer than the
/// logical word while steps shrink k, and is truncated once at the end.
class Stemmer {
 public:
  explicit Stemmer(std::string& buf) : b(buf), k(static_cast<int>(buf.size()) - 1) {}

  void run() {
    if (k <= 1) return;  // one- and two-letter words are left alone
    step1ab();
    step1c();
    step2();
    step3();
    step4();
    step5();
    b.resize(static_cast<std::size_t>(k) + 1);
  }

 private:
  std::string& b;
  int k;
  int j = 0;

  bool cons(int i) const {
    switch (b[static_cast<std::size_t>(i)]) {
      case 'a':
      case 'e':
      case 'i':
      case 'o':
      case 'u':
        return false;
      case 'y':
        return i == 0 ? true : !cons(i - 1);
      default:
        return true;
    }
  }

  // Number of consonant-vowel transitions ("measure") in b[0..j].
  int m() const {
    int n = 0;
    int i = 0;
    while (true) {
      if (i > j) return n;
      if (!cons(i)) break;
      ++i;
    }
    ++i;
    while (true) {
      while (true) {
        if (i > j) return n;
        if (cons(i)) break;
        ++i;
      }
      ++i;
      ++n;
      while (true) {
        if (i > j) return n;
        if (!cons(i)) break;
        ++i;
      }
      ++i;
    }
  }

  bool vowelinstem() const {
    for (int i = 0; i <= j; ++i) {
      if (!cons(i)) return true;
    }
    return false;
  }

  bool doublec(int at) const {
    if (at < 1) return false;
    if (b[static_cast<std::size_t>(at)] != b[static_cast<std::size_t>(at) - 1]) return false;
    return cons(at);
  }

  // consonant - vowel - consonant ending at i, final consonant not w/x/y;
  // marks stems like "hop" that restore an 'e' ("hoping" -> "hope").
  bool cvc(int i) const {
    if (i < 2 || !cons(i) || cons(i - 1) || !cons(i - 2)) return false;
    char ch = b[static_cast<std::size_t>(i)];
    return ch != 'w' && ch != 'x' && ch != 'y';
  }

  bool ends(std::string_view s) {
    int len = static_cast<int>(s.size());
    if (len > k + 1) return false;
    if (b.compare(static_cast<std::size_t>(k - len + 1), static_cast<std::size_t>(len), s) != 0) {
      return false;
    }
    j = k - len;
    return true;
  }

  void setto(std::string_view s) {
    b.resize(static_cast<std::size_t>(j) + 1);
    b.append(s);
    k = j + static_cast<int>(s.size());
  }

  void r(std::string_view s) {
    if (m() > 0) setto(s);
  }

  // Plurals and -ed/-ing.
  void step1ab() {
    if (b[static_cast<std::size_t>(k)] == 's') {
      if (ends("sses")) {
        k -= 2;
      } else if (ends("ies")) {
        setto("i");
      } else if (b[static_cast<std::size_t>(k) - 1] != 's') {
        --k;
      }
    }
    if (ends("eed")) {
      if (m() > 0) --k;
    } else if ((ends("ed") || ends("ing")) && vowelinstem()) {
      k = j;
      if (ends("at")) {
        setto("ate");
      } else if (ends("bl")) {
        setto("ble");
      } else if (ends("iz")) {
        setto("ize");
      } else if (doublec(k)) {
        --k;
        char ch = b[static_cast<std::size_t>(k)];
        if (ch == 'l' || ch == 's' || ch == 'z') ++k;
      } else if (m() == 1 && cvc(k)) {
        setto("e");
      }
    }
  }

  // Terminal y -> i when there is a vowel in the stem.
  void step1c() {
    if (ends("y") && vowelinstem()) b[static_cast<std::size_t>(k)] = 'i';
  }

  void step2() {
    if (k < 1) return;
    switch (b[static_cast<std::size_t>(k) - 1]) {
      case 'a':
        if (ends("ational")) {
          r("ate");
          break;
        }
        if (ends("tional")) {
          r("tion");
          break;
        }
        break;
      case 'c':
        if (ends("enci")) {
          r("ence");
          break;
        }
        if (ends("anci")) {
          r("ance");
          break;
        }
        break;
      case 'e':
        if (ends("izer")) {
          r("ize");
          break;
        }
        break;
      case 'l':
        if (ends("bli")) {  // reference-implementation departure (was -abli)
          r("ble");
          break;
        }
        if (ends("alli")) {
          r("al");
          break;
        }
        if (ends("entli")) {
          r("ent");
          break;
        }
        if (ends("eli")) {
          r("e");
          break;
        }
        if (ends("ousli")) {
          r("ous");
          break;
        }
        break;
      case 'o':
        if (ends("ization")) {
          r("ize");
          break;
        }
        if (ends("ation")) {
          r("ate");
          break;
        }
        if (ends("ator")) {
          r("ate");
          break;
        }
        break;
      case 's':
        if (ends("alism")) {
          r("al");
          break;
        }
        if (ends("iveness")) {
          r("ive");
          break;
        }
        if (ends("fulness")) {
          r("ful");
          break;
        }
        if (ends("ousness")) {
          r("ous");
          break;
        }
        break;
      case 't':
        if (ends("aliti")) {
          r("al");
          break;
        }
        if (ends("iviti")) {
          r("ive");
          break;
        }
        if (ends("biliti")) {
          r("ble");
          break;
        }
        break;
      case 'g':
        if (ends("logi")) {  // reference-implementation departure
          r("log");
          break;
        }
        break;
      default:
        break;
    }
  }

  void step3() {
    switch (b[static_cast<std::size_t>(k)]) {
      case 'e':
        if (ends("icate")) {
          r("ic");
          break;
        }
        if (ends("ative")) {
          r("");
          break;
        }
        if (ends("alize")) {
          r("al");
          break;
        }
        break;
      case 'i':
        if (ends("iciti")) {
          r("ic");
          break;
        }
        break;
      case 'l':
        if (ends("ical")) {
          r("ic");
          break;
        }
        if (ends("ful")) {
          r("");
          break;
        }
        break;
      case 's':
        if (ends("ness")) {
          r("");
          break;
        }
        break;
      default:
        break;
    }
  }

  // Drops -ant, -ence, etc. when the measure is large enough.
  void step4() {
    if (k < 1) return;
    switch (b[static_cast<std::size_t>(k) - 1]) {
      case 'a':
        if (ends("al")) break;
        return;
      case 'c':
        if (ends("ance")) break;
        if (ends("ence")) break;
        return;
      case 'e':
        if (ends("er")) break;
        return;
      case 'i':
        if (ends("ic")) break;
        return;
      case 'l':
        if (ends("able")) break;
        if (ends("ible")) break;
        return;
      case 'n':
        if (ends("ant")) break;
        if (ends("ement")) break;
        if (ends("ment")) break;
        if (ends("ent")) break;
        return;
      case 'o':
        if (ends("ion") && j >= 0 &&
            (b[static_cast<std::size_t>(j)] == 's' || b[static_cast<std::size_t>(j)] == 't')) {
          break;
        }
        if (ends("ou")) break;  // handles -ous
        return;
      case 's':
        if (ends("ism")) break;
        return;
      case 't':
        if (ends("ate")) break;
        if (ends("iti")) break;
        return;
      case 'u':
        if (ends("ous")) break;
        return;
      case 'v':
        if (ends("ive")) break;
        return;
      case 'z':
        if (ends("ize")) break;
        return;
      default:
        return;
    }
    if (m() > 1) k = j;
  }

  // Final -e removal and -ll reduction.
  void step5() {
    j = k;
    if (b[static_cast<std::size_t>(k)] == 'e') {
      int a = m();
      if (a > 1 || (a == 1 && !cvc(k - 1))) --k;
    }
    if (b[static_cast<std::size_t>(k)] == 'l' && doublec(k) && m() > 1) --k;
  }
};

}  // namespace

std::string porter_stem(std::string_view word) {
  std::string buf(word);
  Stemmer(buf).run();
  return buf;
}

const std::vector<std::string>& stopword_list() {
  static const std::vector<std::string> words = {
      "a",        "about",   "above",    "after",   "again",      "against", "all",
      "am",       "an",      "and",      "any",     "are",        "as",      "at",
      "be",       "because", "been",     "before",  "being",      "below",   "between",
      "both",     "but",     "by",       "can",     "did",        "do",      "does",
      "doing",    "don",     "down",     "during",  "each",       "few",     "for",
      "from",     "further", "had",      "has",     "have",       "having",  "he",
      "her",      "here",    "hers",     "herself", "him",        "himself", "his",
      "how",      "i",       "if",       "in",      "into",       "is",      "it",
      "its",      "itself",  "just",     "me",      "more",       "most",    "my",
      "myself",   "no",      "nor",      "not",     "now",        "of",      "off",
      "on",       "once",    "only",     "or",      "other",      "our",     "ours",
      "ourselves", "out",    "over",     "own",     "s",          "same",    "she",
      "should",   "so",      "some",     "such",    "t",          "than",    "that",
      "the",      "their",   "theirs",   "them",    "themselves", "then",    "there",
      "these",    "they",    "this",     "those",   "through",    "to",      "too",
      "under",    "until",   "up",       "very",    "was",        "we",      "were",
      "what",     "when",    "where",    "which",   "while",      "who",     "whom",
      "why",      "will",    "with",     "you",     "your",       "yours",   "yourself",
      "yourselves"};
  return words;
}

bool is_stopword(std::string_view word) {
  const auto& list = stopword_list();
  return std::binary_search(list.begin(), list.end(), word);
}

std::vector<std::string> title_skill_stems(std::string_view title) {
  std::vector<std::string> out;
  for (const std::string& tok : tokenize_title(title)) {
    if (is_stopword(tok)) continue;
    out.push_back(porter_stem(tok));
  }
  return out;
}

}  // namespace teamform
