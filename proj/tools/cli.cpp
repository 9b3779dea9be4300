#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "tagix/bundle.hpp"
#include "tagix/corpus.hpp"
#include "tagix/error.hpp"
#include "tagix/fm_search.hpp"
#include "tagix/query.hpp"
#include "tagix/report.hpp"
#include "tagix/simd/kernels.hpp"
#include "tagix/synthetic.hpp"

namespace tagix::cli {
namespace {

struct BuildArgs {
  std::string input;
  std::string format = "auto";
  std::vector<std::string> schemes;
  std::string labels;
  std::string tree;
  char separator = kDefaultSeparator;
  char terminator = kDefaultTerminator;
  char gap = kDefaultGap;
  std::string out;
};

struct StatsArgs {
  std::string bundle;
  bool synthetic = false;
  SyntheticSpec spec;
};

struct QueryArgs {
  std::string bundle;
  std::string reads;
  std::string tag;
  std::size_t min_len = kDefaultMinMemLength;
  unsigned threads = 1;
};

// Aligned input without sentinels gets an extra sentinel column.
Alignment with_sentinel_column(Alignment a, const SentinelConfig& s) {
  const bool has_sentinel = std::any_of(a.rows.begin(), a.rows.end(), [&](const std::string& row) {
    const auto last = row.find_last_not_of(a.gap);
    return last != std::string::npos && s.is_sentinel(row[last]);
  });
  if (has_sentinel) return a;
  for (std::size_t r = 0; r < a.rows.size(); ++r) a.rows[r].push_back(r + 1 == a.rows.size() ? s.terminator : s.separator);
  ++a.width;
  return a;
}

Corpus load_corpus(const BuildArgs& args) {
  const std::string content = read_file(args.input);
  const SentinelConfig sentinels{args.separator, args.terminator};
  std::string format = args.format;
  if (format == "auto") format = (!content.empty() && content.front() == '>') ? "fasta" : "text";
  if (format == "msa") return corpus_from_alignment(with_sentinel_column(parse_msa(content, args.gap), sentinels), sentinels);
  if (format == "fasta") return corpus_from_documents(parse_fasta(content), sentinels);
  if (format == "text") return corpus_from_documents(parse_lines(content), sentinels);
  throw ValidationError("unknown input format '" + format + "'");
}

std::vector<TagScheme> resolve_schemes(const BuildArgs& args, const Corpus& corpus) {
  std::vector<TagScheme> schemes;
  auto add = [&](SchemeKind kind) {
    if (std::none_of(schemes.begin(), schemes.end(), [&](const TagScheme& s) { return s.kind == kind; })) {
      schemes.push_back(TagScheme{kind});
    }
  };
  if (args.schemes.empty()) {
    add(SchemeKind::kDocument);
    if (corpus.has_columns()) add(SchemeKind::kColumn);
    add(SchemeKind::kEndLcp);
    add(SchemeKind::kIlcp);
    if (corpus.has_labels()) add(SchemeKind::kLabel);
    if (corpus.has_tree()) add(SchemeKind::kLeafRank);
    return schemes;
  }
  for (const auto& name : args.schemes) {
    const auto kind = parse_scheme(name);
    if (!kind) throw ValidationError("unknown scheme '" + name + "'");
    add(*kind);
  }
  return schemes;
}

int cmd_build(const BuildArgs& args, std::ostream& out) {
  Corpus corpus = load_corpus(args);
  if (!args.labels.empty()) corpus.set_labels_by_name(parse_labels_tsv(read_file(args.labels)));
  if (!args.tree.empty()) corpus.set_tree(PhyloTree::parse_newick(read_file(args.tree)));
  const auto schemes = resolve_schemes(args, corpus);
  const IndexBundle bundle = build_bundle(std::move(corpus), schemes);
  save_bundle(bundle, args.out);

  out << "n\t" << bundle.index.size() << '\n';
  out << "d\t" << bundle.corpus.doc_count() << '\n';
  out << "r\t" << run_count(bundle.index.bwt()) << '\n';
  for (const auto& [name, rle] : bundle.tag_arrays) out << "runs:" << name << '\t' << rle.run_count() << '\n';
  return kOk;
}

int cmd_dump(const std::string& path, std::ostream& out) {
  out << dump_tsv(load_bundle(path));
  return kOk;
}

int cmd_stats(const StatsArgs& args, std::ostream& out) {
  if (args.synthetic) {
    const auto e = run_synthetic_experiment(args.spec);
    out << "# synthetic species=" << args.spec.species << " copies=" << args.spec.copies
        << " length=" << args.spec.length << " mutation_rate=" << args.spec.mutation_rate
        << " seed=" << args.spec.seed << " n=" << e.n << '\n';
    out << stats_tsv(e.named());
    out << "# species runs < document runs: " << (e.species.run_count < e.document.run_count ? "yes" : "no")
        << '\n';
    out << "# leaf-rank mean |delta| tree=" << e.leaf_rank_tree.mean_abs_delta
        << " shuffled=" << e.leaf_rank_shuffled.mean_abs_delta << " (shuffle seed " << e.shuffle_seed << ")\n";
    return kOk;
  }
  if (args.bundle.empty()) throw ValidationError("stats needs a bundle path or --synthetic");
  out << stats_tsv(bundle_stats(load_bundle(args.bundle)));
  return kOk;
}

std::vector<Read> load_reads(const std::string& path) {
  const std::string content = read_file(path);
  std::vector<Read> reads;
  if (!content.empty() && content.front() == '>') {
    for (auto& d : parse_fasta(content)) reads.push_back(Read{std::move(d.name), std::move(d.body)});
  } else {
    for (auto& d : parse_lines(content)) reads.push_back(Read{"read" + std::to_string(d.id), std::move(d.body)});
  }
  return reads;
}

const RunLengthTagArray& find_tag(const IndexBundle& bundle, const std::string& name) {
  const auto it = bundle.tag_arrays.find(name);
  if (it == bundle.tag_arrays.end()) throw ValidationError("bundle lacks section TAG:" + name);
  return it->second;
}

bool has_sentinel(const Corpus& corpus, const std::string& read) {
  return std::any_of(read.begin(), read.end(), [&](char c) { return corpus.sentinels().is_sentinel(c); });
}

std::string tag_display(const IndexBundle& bundle, const std::string& tag_name, Tag t) {
  const auto it = bundle.tag_codes.find(tag_name);
  if (it != bundle.tag_codes.end() && t >= 0 && static_cast<std::size_t>(t) < it->second.size()) {
    return it->second[static_cast<std::size_t>(t)];
  }
  return std::to_string(t);
}

int cmd_query(const QueryArgs& args, std::ostream& out) {
  const IndexBundle bundle = load_bundle(args.bundle);
  const auto& tags = find_tag(bundle, args.tag);
  const FmIndex fm(bundle.index);
  const auto reads = load_reads(args.reads);
  out << "read\tp_start\tp_end\tlo\thi\ttags\n";
  for (const auto& read : reads) {
    if (has_sentinel(bundle.corpus, read.sequence)) {
      out << read.name << "\terror\tread contains a sentinel byte\n";
      continue;
    }
    for (const auto& entry : mem_tag_report(fm, tags, read.sequence, args.min_len)) {
      out << read.name << '\t' << entry.mem.p_start << '\t' << entry.mem.p_end << '\t' << entry.mem.interval.lo
          << '\t' << entry.mem.interval.hi << '\t';
      for (std::size_t k = 0; k < entry.tags.size(); ++k) out << (k ? "," : "") << entry.tags[k];
      out << '\n';
    }
  }
  return kOk;
}

int cmd_classify(const QueryArgs& args, std::ostream& out) {
  const IndexBundle bundle = load_bundle(args.bundle);
  const auto& tags = find_tag(bundle, args.tag);
  const FmIndex fm(bundle.index);
  const auto reads = load_reads(args.reads);
  std::vector<Read> valid;
  std::vector<bool> rejected(reads.size(), false);
  for (std::size_t i = 0; i < reads.size(); ++i) {
    if (has_sentinel(bundle.corpus, reads[i].sequence)) {
      rejected[i] = true;
    } else {
      valid.push_back(reads[i]);
    }
  }
  const auto results = classify_batch(fm, tags, valid, args.min_len, args.threads);
  out << "read\tverdict\tscore\n";
  std::size_t next = 0;
  for (std::size_t i = 0; i < reads.size(); ++i) {
    if (rejected[i]) {
      out << reads[i].name << "\terror\tread contains a sentinel byte\n";
      continue;
    }
    const auto& c = results[next++];
    out << c.read_name << '\t' << (c.verdict ? tag_display(bundle, args.tag, *c.verdict) : "unclassified") << '\t'
        << c.score << '\n';
  }
  return kOk;
}

void add_query_options(CLI::App* cmd, QueryArgs& args, const std::string& default_tag) {
  args.tag = default_tag;
  cmd->add_option("bundle", args.bundle, "Index bundle")->required()->check(CLI::ExistingFile);
  cmd->add_option("--reads", args.reads, "Reads: FASTA or one sequence per line")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--tag", args.tag, "Tag array to report")->capture_default_str();
  cmd->add_option("--min-mem-len", args.min_len, "Minimum MEM length")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"tagix: tag arrays over BWT-indexed document collections", "tagix"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "tagix 0.1.0");

  BuildArgs build;
  auto* build_cmd = app.add_subcommand("build", "Index a corpus and materialize tag arrays");
  build_cmd->add_option("--input", build.input, "Input file")->required()->check(CLI::ExistingFile);
  build_cmd->add_option("--format", build.format, "auto, text, fasta or msa")
      ->capture_default_str()
      ->check(CLI::IsMember({"auto", "text", "fasta", "msa"}));
  build_cmd->add_option("--scheme", build.schemes,
                        "Tag scheme(s): document, column, label, leaf_rank, end_lcp, ilcp, plcp, position")
      ->delimiter(',');
  build_cmd->add_option("--labels", build.labels, "TSV of doc_name<TAB>label")->check(CLI::ExistingFile);
  build_cmd->add_option("--tree", build.tree, "Newick tree")->check(CLI::ExistingFile);
  build_cmd->add_option("--separator", build.separator, "Separator byte")->capture_default_str();
  build_cmd->add_option("--terminator", build.terminator, "Final terminator byte")->capture_default_str();
  build_cmd->add_option("--gap", build.gap, "Gap byte in alignments")->capture_default_str();
  build_cmd->add_option("--out", build.out, "Output bundle path")->required();

  std::string dump_path;
  auto* dump_cmd = app.add_subcommand("dump", "Print the BWT-order table as TSV");
  dump_cmd->add_option("bundle", dump_path, "Index bundle")->required()->check(CLI::ExistingFile);

  StatsArgs stats;
  auto* stats_cmd = app.add_subcommand("stats", "Run statistics for a bundle or a synthetic pangenome");
  stats_cmd->add_option("bundle", stats.bundle, "Index bundle")->check(CLI::ExistingFile);
  stats_cmd->add_flag("--synthetic", stats.synthetic, "Generate a synthetic corpus instead of loading a bundle");
  stats_cmd->add_option("--species", stats.spec.species)->capture_default_str();
  stats_cmd->add_option("--copies", stats.spec.copies)->capture_default_str();
  stats_cmd->add_option("--length", stats.spec.length)->capture_default_str();
  stats_cmd->add_option("--mutation-rate", stats.spec.mutation_rate)->capture_default_str();
  stats_cmd->add_option("--seed", stats.spec.seed)->capture_default_str();

  QueryArgs query;
  auto* query_cmd = app.add_subcommand("query", "Report distinct tags for each MEM of each read");
  add_query_options(query_cmd, query, "document");

  QueryArgs classify_args;
  auto* classify_cmd = app.add_subcommand("classify", "Classify reads by MEM-length-weighted tag votes");
  add_query_options(classify_cmd, classify_args, "label");
  classify_cmd->add_option("--threads", classify_args.threads, "Worker threads")->capture_default_str();

  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << app.version() << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (*build_cmd) return cmd_build(build, out);
    if (*dump_cmd) return cmd_dump(dump_path, out);
    if (*stats_cmd) return cmd_stats(stats, out);
    if (*query_cmd) return cmd_query(query, out);
    if (*classify_cmd) return cmd_classify(classify_args, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kRuntimeError;
  }
  return kUsageError;
}

}  // namespace tagix::cli
