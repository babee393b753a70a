#include "gf2hd/knowledge.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "gf2hd/errors.hpp"

namespace gf2hd {

TreeletRegistry::TreeletRegistry(const BlockPolynomialConfig& cfg) {
  slots_.reserve(cfg.N());
  for (int b = 0; b < cfg.N(); ++b) {
    slots_.push_back(Slot{cfg.generator(b), 0, false});
  }
}

void TreeletRegistry::deposit(int block, BlockState ea_block) {
  Slot& s = slots_.at(block);
  if (s.occupied) {
    throw std::invalid_argument("treelet registry: block already occupied");
  }
  s.value = ea_block;
  s.occupied = true;
}

KnowledgeStore::KnowledgeStore(const BlockPolynomialConfig& cfg,
                               double confidence_threshold)
    : cfg_(cfg),
      threshold_(confidence_threshold),
      kinds_(cfg),
      roles_(cfg),
      values_(cfg),
      alloc_(0) {
  roles_.add_entry(kIsaRole, item_vector(cfg_, kIsaRole));
}

void KnowledgeStore::register_kind(const std::string& token) {
  kinds_.add_entry(token, item_vector(cfg_, token));
}

void KnowledgeStore::register_role(const std::string& token) {
  roles_.add_entry(token, item_vector(cfg_, token));
}

void KnowledgeStore::register_value(const std::string& token) {
  values_.add_entry(token, item_vector(cfg_, token));
}

const IndividualRecord& KnowledgeStore::add_individual(const std::string& label) {
  validate_token(label);
  if (find(label) != nullptr) {
    throw std::invalid_argument("store: duplicate label: " + label);
  }
  IndividualRecord rec;
  rec.label = label;
  rec.ea = alloc_.fresh(cfg_);
  rec.kinds = Bundle{Hypervector::zero(cfg_), 0};
  rec.props = Bundle{Hypervector::zero(cfg_), 0};
  records_.push_back(std::move(rec));
  return records_.back();
}

IndividualRecord& KnowledgeStore::require_record(const std::string& label) {
  for (IndividualRecord& r : records_) {
    if (r.label == label) return r;
  }
  throw std::invalid_argument("store: unknown individual: " + label);
}

const IndividualRecord& KnowledgeStore::require_record(
    const std::string& label) const {
  for (const IndividualRecord& r : records_) {
    if (r.label == label) return r;
  }
  throw std::invalid_argument("store: unknown individual: " + label);
}

void KnowledgeStore::assert_kind(const std::string& label,
                                 const std::string& kind) {
  IndividualRecord& rec = require_record(label);
  if (!kinds_.contains(kind)) {
    throw std::invalid_argument("store: unknown kind token: " + kind);
  }
  if (!rec.asserted_kinds.insert(kind).second) {
    throw std::invalid_argument(
        "store: kind already asserted (re-asserting would cancel it): " + kind);
  }
  rec.kinds.value = xor_hv(
      rec.kinds.value,
      bind(cfg_, roles_.entry(kIsaRole), kinds_.entry(kind)));
  rec.kinds.arity += 1;
}

ReadoutResult KnowledgeStore::query_kind(const std::string& label) const {
  const IndividualRecord& rec = require_record(label);
  if (rec.kinds.arity == 0) {
    throw EmptyBundleError("store: no kinds asserted for " + label);
  }
  return kinds_.cleanup(
      unbind(cfg_, rec.kinds.value, roles_.entry(kIsaRole)));
}

void KnowledgeStore::assert_prop(const std::string& label,
                                 const std::string& role,
                                 const std::string& value) {
  IndividualRecord& rec = require_record(label);
  if (!roles_.contains(role)) {
    throw std::invalid_argument("store: unknown role token: " + role);
  }
  if (!values_.contains(value)) {
    throw std::invalid_argument("store: unknown value token: " + value);
  }
  if (!rec.asserted_props.insert({role, value}).second) {
    throw std::invalid_argument(
        "store: property already asserted (re-asserting would cancel it): " +
        role + "=" + value);
  }
  rec.props.value = xor_hv(
      rec.props.value, bind(cfg_, roles_.entry(role), values_.entry(value)));
  rec.props.arity += 1;
}

PropReadout KnowledgeStore::query_prop(const std::string& label,
                                       const std::string& role) const {
  const IndividualRecord& rec = require_record(label);
  if (!roles_.contains(role)) {
    throw std::invalid_argument("store: unknown role token: " + role);
  }
  if (rec.props.arity == 0) {
    throw EmptyBundleError("store: no properties asserted for " + label);
  }
  PropReadout out;
  out.readout = values_.cleanup(
      unbind(cfg_, rec.props.value, roles_.entry(role)));
  out.below_threshold = out.readout.cr1 < threshold_;
  return out;
}

bool KnowledgeStore::same_individual(const Hypervector& a,
                                     const Hypervector& b) {
  return a == b;
}

const IndividualRecord* KnowledgeStore::find(const std::string& label) const {
  for (const IndividualRecord& r : records_) {
    if (r.label == label) return &r;
  }
  return nullptr;
}

const IndividualRecord* KnowledgeStore::find_by_ea(const Hypervector& ea) const {
  for (const IndividualRecord& r : records_) {
    if (r.ea == ea) return &r;
  }
  return nullptr;
}

std::string KnowledgeStore::record_text(const IndividualRecord& rec) const {
  std::ostringstream out;
  out << rec.label << '\t' << rec.ea.blocks_to_hex(cfg_.q()) << '\t'
      << rec.kinds.value.blocks_to_hex(cfg_.q()) << '\t' << rec.kinds.arity
      << '\t' << rec.props.value.blocks_to_hex(cfg_.q()) << '\t'
      << rec.props.arity;
  return out.str();
}

namespace {

void save_vocab(std::ostream& out, const char* name, const CleanupMemory& m,
                int q) {
  out << "vocab " << name << ' ' << m.size() << "\n";
  for (const auto& [token, v] : m.entries()) {
    out << token << '\t' << v.blocks_to_hex(q) << "\n";
  }
}

void load_vocab(std::istream& in, CleanupMemory& m, int n, int blocks,
                std::uint64_t id) {
  std::string line;
  for (int i = 0; i < n; ++i) {
    if (!std::getline(in, line)) {
      throw std::invalid_argument("store: truncated vocabulary section");
    }
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw std::invalid_argument("store: malformed vocabulary record");
    }
    m.add_entry(line.substr(0, tab),
                Hypervector(id, Hypervector::blocks_from_hex(
                                    line.substr(tab + 1), blocks)));
  }
}

}  // namespace

void KnowledgeStore::save(std::ostream& out) const {
  out << cfg_.to_line() << "\n";
  char tbuf[32];
  std::snprintf(tbuf, sizeof tbuf, "%.6f", threshold_);
  out << "threshold " << tbuf << "\n";
  out << "allocator " << alloc_.next_index() << "\n";
  save_vocab(out, "kinds", kinds_, cfg_.q());
  save_vocab(out, "roles", roles_, cfg_.q());
  save_vocab(out, "values", values_, cfg_.q());
  out << "individuals " << records_.size() << "\n";
  for (const IndividualRecord& rec : records_) {
    out << record_text(rec) << "\n";
  }
  std::size_t assertions = 0;
  for (const IndividualRecord& rec : records_) {
    assertions += rec.asserted_kinds.size() + rec.asserted_props.size();
  }
  out << "assertions " << assertions << "\n";
  for (const IndividualRecord& rec : records_) {
    for (const std::string& k : rec.asserted_kinds) {
      out << rec.label << "\tkind\t" << k << "\n";
    }
    for (const auto& [role, value] : rec.asserted_props) {
      out << rec.label << "\tprop\t" << role << '\t' << value << "\n";
    }
  }
}

void KnowledgeStore::save_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("store: cannot write " + path);
  save(out);
}

KnowledgeStore KnowledgeStore::load(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw std::invalid_argument("store: missing config header");
  }
  BlockPolynomialConfig cfg = BlockPolynomialConfig::from_line(line);

  double threshold = kDefaultConfidenceThreshold;
  if (!std::getline(in, line) || line.rfind("threshold ", 0) != 0) {
    throw std::invalid_argument("store: missing threshold line");
  }
  threshold = std::stod(line.substr(10));

  KnowledgeStore store(cfg, threshold);
  store.roles_ = CleanupMemory(cfg);  // refilled from the file below

  if (!std::getline(in, line) || line.rfind("allocator ", 0) != 0) {
    throw std::invalid_argument("store: missing allocator line");
  }
  store.alloc_ = EaAllocator(std::stoull(line.substr(10)));

  const char* sections[3] = {"kinds", "roles", "values"};
  CleanupMemory* vocabs[3] = {&store.kinds_, &store.roles_, &store.values_};
  for (int s = 0; s < 3; ++s) {
    if (!std::getline(in, line)) {
      throw std::invalid_argument("store: truncated file");
    }
    std::istringstream hdr(line);
    std::string word, name;
    int n = 0;
    hdr >> word >> name >> n;
    if (word != "vocab" || name != sections[s]) {
      throw std::invalid_argument("store: expected vocab section " +
                                  std::string(sections[s]));
    }
    load_vocab(in, *vocabs[s], n, cfg.N(), cfg.id());
  }
  if (!store.roles_.contains(kIsaRole)) {
    throw std::invalid_argument("store: role vocabulary lost the ISA role");
  }

  if (!std::getline(in, line) || line.rfind("individuals ", 0) != 0) {
    throw std::invalid_argument("store: missing individuals section");
  }
  const int n = std::stoi(line.substr(12));
  for (int i = 0; i < n; ++i) {
    if (!std::getline(in, line)) {
      throw std::invalid_argument("store: truncated individuals section");
    }
    std::vector<std::string> fields;
    std::size_t pos = 0;
    while (true) {
      const auto tab = line.find('\t', pos);
      if (tab == std::string::npos) {
        fields.push_back(line.substr(pos));
        break;
      }
      fields.push_back(line.substr(pos, tab - pos));
      pos = tab + 1;
    }
    if (fields.size() != 6) {
      throw std::invalid_argument("store: malformed individual record");
    }
    IndividualRecord rec;
    rec.label = fields[0];
    rec.ea = Hypervector(cfg.id(),
                         Hypervector::blocks_from_hex(fields[1], cfg.N()));
    rec.kinds.value = Hypervector(
        cfg.id(), Hypervector::blocks_from_hex(fields[2], cfg.N()));
    rec.kinds.arity = std::stoull(fields[3]);
    rec.props.value = Hypervector(
        cfg.id(), Hypervector::blocks_from_hex(fields[4], cfg.N()));
    rec.props.arity = std::stoull(fields[5]);
    store.records_.push_back(std::move(rec));
  }

  if (!std::getline(in, line) || line.rfind("assertions ", 0) != 0) {
    throw std::invalid_argument("store: missing assertions section");
  }
  const long long asserts = std::stoll(line.substr(11));
  for (long long i = 0; i < asserts; ++i) {
    if (!std::getline(in, line)) {
      throw std::invalid_argument("store: truncated assertions section");
    }
    std::vector<std::string> fields;
    std::size_t pos = 0;
    while (true) {
      const auto tab = line.find('\t', pos);
      if (tab == std::string::npos) {
        fields.push_back(line.substr(pos));
        break;
      }
      fields.push_back(line.substr(pos, tab - pos));
      pos = tab + 1;
    }
    IndividualRecord& rec = store.require_record(fields.at(0));
    if (fields.at(1) == "kind" && fields.size() == 3) {
      rec.asserted_kinds.insert(fields[2]);
    } else if (fields.at(1) == "prop" && fields.size() == 4) {
      rec.asserted_props.insert({fields[2], fields[3]});
    } else {
      throw std::invalid_argument("store: malformed assertion record");
    }
  }
  return store;
}

KnowledgeStore KnowledgeStore::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("store: cannot read " + path);
  return load(in);
}

}  // namespace gf2hd
