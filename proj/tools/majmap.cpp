#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "majmap/bench_io.hpp"
#include "majmap/errors.hpp"
#include "majmap/pipeline.hpp"

using namespace majmap;

namespace
{

constexpr int exit_ok = 0, exit_usage = 1, exit_parse = 2, exit_verify = 3;

CellLibrary load_library( const std::string& path )
{
  if ( path.empty() )
    return CellLibrary::defaults();
  std::ifstream in( path );
  if ( !in )
    throw config_error( "cannot open cell library " + path );
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_cell_library( ss.str() );
}

std::string label( const Network& net, NodeId id )
{
  const auto& n = net.node( id );
  return n.name.empty() ? "#" + std::to_string( id ) : n.name;
}

std::string truth_string( std::uint16_t truth, std::uint32_t arity )
{
  std::string s;
  for ( std::uint32_t m = 0; m < ( 1u << arity ); ++m )
    s += ( ( truth >> m ) & 1u ) ? '1' : '0';
  return s;
}

void print_verification( std::ostream& os, const EquivalenceReport& v )
{
  os << "verified=" << ( v.equivalent ? "yes" : "no" ) << '\n'
     << "verify_mode=" << ( v.exhaustive ? "exhaustive" : "random" ) << '\n'
     << "verify_patterns=" << v.patterns << '\n';
  if ( !v.equivalent )
  {
    os << "mismatch=" << v.mismatch << '\n' << "counterexample=";
    for ( std::size_t i = 0; i < v.counterexample.size(); ++i )
      os << ( i ? "," : "" ) << v.counterexample[i].first << '=' << v.counterexample[i].second;
    os << '\n';
  }
}

struct SynthFlags
{
  std::string input, output, lib, report;
  std::uint32_t k{ 3 }, max_passes{ 8 };
  bool no_merge_replace{ false }, no_maj{ false }, no_xor{ false }, no_verify{ false }, complement{ false };
  bool json{ false }, closed_cuts{ false };
  std::uint64_t vectors{ 10000 }, seed{ 0 };
};

PipelineOptions pipeline_options( const SynthFlags& f )
{
  check_k( f.k );
  if ( f.max_passes == 0 )
    throw config_error( "--max-passes must be at least 1" );
  PipelineOptions o;
  o.mapper.k = f.k;
  o.mapper.max_passes = f.max_passes;
  o.mapper.minimize.maj = !f.no_maj;
  o.mapper.minimize.xor_xnor = !f.no_xor;
  o.mapper.complement = f.complement;
  o.mapper.shared_cuts = !f.closed_cuts;
  o.mapper.seed = f.seed;
  o.merge_replace = !f.no_merge_replace;
  o.verify = !f.no_verify;
  o.equivalence.vectors = f.vectors;
  if ( f.seed )
    o.equivalence.seed = f.seed;
  return o;
}

int cmd_synth( const SynthFlags& f )
{
  auto options = pipeline_options( f );
  auto lib = load_library( f.lib );
  auto input = read_bench_file( f.input );
  auto result = run_pipeline( input, lib, options );

  if ( !f.output.empty() )
  {
    write_bench_file( result.output, f.output );
    auto json_path = std::filesystem::path( f.output ).replace_extension( ".json" );
    std::ofstream( json_path ) << network_to_json( result.output ) << '\n';
  }

  std::string text = format_report_text( result.metrics, result.phases );
  std::ostringstream extra;
  extra << "rewrites=" << result.mapping.rewrites << '\n' << "passes=" << result.mapping.passes << '\n';
  if ( result.verification )
    print_verification( extra, *result.verification );
  text += extra.str();
  auto json = format_report_json( result.metrics, result.phases );

  if ( !f.report.empty() )
  {
    std::ofstream( f.report ) << text;
    std::ofstream( std::filesystem::path( f.report ).replace_extension( ".json" ) ) << json << '\n';
  }
  std::cout << ( f.json ? json + "\n" : text );

  if ( result.verification && !result.verification->equivalent )
  {
    std::cerr << "error: synthesized network is not equivalent to the input (output "
              << result.verification->mismatch << ")\n";
    return exit_verify;
  }
  return exit_ok;
}

int cmd_metrics( const std::string& input, const std::string& lib_path, bool json )
{
  auto lib = load_library( lib_path );
  auto net = read_bench_file( input );
  auto m = network_metrics( net, lib );
  std::cout << ( json ? format_report_json( m, {} ) + "\n" : format_report_text( m, {} ) );
  return exit_ok;
}

int cmd_cuts( const std::string& input, const std::string& node, std::uint32_t k, const std::string& lib_path )
{
  check_k( k );
  auto lib = load_library( lib_path );
  auto net = read_bench_file( input );
  convert_gates( net );
  insert_splitters( net );
  auto id = net.find_node( node );
  if ( !id )
    throw config_error( "unknown node '" + node + "'" );
  auto cuts = enumerate_cuts( net, *id, k );
  if ( cuts.empty() )
  {
    std::cout << "no cuts\n";
    return exit_ok;
  }
  std::cout << cuts.size() << " cuts for " << node << " (K=" << k << ")\n";
  for ( const auto& c : cuts )
  {
    std::cout << "leaves={";
    for ( std::size_t i = 0; i < c.leaves.size(); ++i )
      std::cout << ( i ? "," : "" ) << label( net, c.leaves[i] );
    std::cout << "} interior={";
    for ( std::size_t i = 0; i < c.interior.size(); ++i )
      std::cout << ( i ? "," : "" ) << label( net, c.interior[i] );
    auto cover = minimize( c.truth, c.arity() );
    std::vector<std::uint32_t> levels;
    for ( auto l : c.leaves )
      levels.push_back( net.level( l ) );
    auto cand = build_candidate( cover, levels, lib );
    auto original = cost_original_cut( net, c, lib );
    std::cout << "} truth=" << truth_string( c.truth, c.arity() ) << " cover=" << cover.str()
              << " original_pnd=" << original;
    if ( cand )
      std::cout << " candidate_pnd=" << cand->pnd << " improvement=" << original - cand->pnd;
    else
      std::cout << " candidate_pnd=none";
    std::cout << '\n';
  }
  return exit_ok;
}

int cmd_verify( const std::string& a, const std::string& b, std::uint64_t vectors, std::uint64_t seed )
{
  EquivalenceOptions o;
  o.vectors = vectors;
  if ( seed )
    o.seed = seed;
  auto rep = check_equivalence( read_bench_file( a ), read_bench_file( b ), o );
  print_verification( std::cout, rep );
  return rep.equivalent ? exit_ok : exit_verify;
}

int cmd_bench_dir( const std::string& dir, const std::string& csv, const SynthFlags& f )
{
  auto options = pipeline_options( f );
  auto lib = load_library( f.lib );
  std::vector<std::filesystem::path> files;
  for ( const auto& e : std::filesystem::directory_iterator( dir ) )
  {
    if ( e.path().extension() == ".bench" )
      files.push_back( e.path() );
  }
  std::sort( files.begin(), files.end() );

  std::ostringstream os;
  os << "circuit,B1_depth,B1_jjs,B1_pnd,B1_dffs_invs,F_depth,F_jjs,F_pnd,F_dffs_invs,verified\n";
  bool all_ok = true;
  for ( const auto& p : files )
  {
    auto input = read_bench_file( p );
    auto b1 = network_metrics( baseline_network( input ), lib );
    auto r = run_pipeline( input, lib, options );
    bool ok = !r.verification || r.verification->equivalent;
    all_ok = all_ok && ok;
    os << p.stem().string() << ',' << b1.depth << ',' << b1.jjs << ',' << b1.pnd << ',' << b1.dffs_plus_invs << ','
       << r.metrics.depth << ',' << r.metrics.jjs << ',' << r.metrics.pnd << ',' << r.metrics.dffs_plus_invs << ','
       << ( r.verification ? ( ok ? "yes" : "no" ) : "skipped" ) << '\n';
  }
  if ( !csv.empty() )
    std::ofstream( csv ) << os.str();
  std::cout << os.str();
  return all_ok ? exit_ok : exit_verify;
}

void add_synth_flags( CLI::App* app, SynthFlags& f, bool with_output )
{
  app->add_option( "--k", f.k, "Maximum cut size (2..4)" );
  app->add_option( "--max-passes", f.max_passes, "Mapping pass limit" );
  app->add_flag( "--no-merge-replace", f.no_merge_replace, "Skip DFF merging and INV replacement" );
  app->add_flag( "--no-maj", f.no_maj, "Disable majority terms" );
  app->add_flag( "--no-xor", f.no_xor, "Disable XOR/XNOR terms" );
  app->add_flag( "--complement", f.complement, "Also try complemented covers" );
  app->add_flag( "--closed-cuts", f.closed_cuts, "Only rewrite cuts whose interior is used by the root alone" );
  app->add_flag( "--no-verify", f.no_verify, "Skip the equivalence check" );
  app->add_option( "--vectors", f.vectors, "Random patterns when exhaustive checking is too large" );
  app->add_option( "--seed", f.seed, "Seed for tie-breaks and random patterns (0: default)" );
  app->add_option( "--lib", f.lib, "Cell library file (NAME=COST lines)" );
  if ( with_output )
  {
    app->add_option( "-o,--output", f.output, "Mapped netlist (.bench, plus a .json mirror)" );
    app->add_option( "--report", f.report, "Write the report here (text, plus a .json twin)" );
    app->add_flag( "--json", f.json, "Print the report as JSON" );
  }
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "SFQ technology mapper with majority logic" };
  app.require_subcommand( 1 );

  SynthFlags synth;
  auto* s = app.add_subcommand( "synth", "Map a netlist and report its cost" );
  s->add_option( "input", synth.input, "Input .bench" )->required();
  add_synth_flags( s, synth, true );

  std::string metrics_in, metrics_lib;
  bool metrics_json = false;
  auto* m = app.add_subcommand( "metrics", "Report the cost of a netlist as is" );
  m->add_option( "input", metrics_in )->required();
  m->add_option( "--lib", metrics_lib );
  m->add_flag( "--json", metrics_json );

  std::string cuts_in, cuts_node, cuts_lib;
  std::uint32_t cuts_k = 3;
  auto* c = app.add_subcommand( "cuts", "List the cuts of one node" );
  c->add_option( "input", cuts_in )->required();
  c->add_option( "node", cuts_node )->required();
  c->add_option( "--k", cuts_k );
  c->add_option( "--lib", cuts_lib );

  std::string va, vb;
  std::uint64_t v_vectors = 10000, v_seed = 0;
  auto* v = app.add_subcommand( "verify", "Check two netlists for equivalence" );
  v->add_option( "a", va )->required();
  v->add_option( "b", vb )->required();
  v->add_option( "--vectors", v_vectors );
  v->add_option( "--seed", v_seed );

  std::string dir, csv;
  SynthFlags bench;
  auto* b = app.add_subcommand( "bench-dir", "Baseline vs mapped table for every .bench in a directory" );
  b->add_option( "dir", dir )->required();
  b->add_option( "--csv", csv, "Also write the table here" );
  add_synth_flags( b, bench, false );

  try
  {
    app.parse( argc, argv );
  }
  catch ( const CLI::ParseError& e )
  {
    auto code = app.exit( e );
    return code == 0 ? exit_ok : exit_usage;
  }

  try
  {
    if ( *s )
      return cmd_synth( synth );
    if ( *m )
      return cmd_metrics( metrics_in, metrics_lib, metrics_json );
    if ( *c )
      return cmd_cuts( cuts_in, cuts_node, cuts_k, cuts_lib );
    if ( *v )
      return cmd_verify( va, vb, v_vectors, v_seed );
    if ( *b )
      return cmd_bench_dir( dir, csv, bench );
  }
  catch ( const config_error& e )
  {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  catch ( const interface_error& e )
  {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  catch ( const parse_error& e )
  {
    std::cerr << "parse error: " << e.what() << '\n';
    return exit_parse;
  }
  catch ( const structural_error& e )
  {
    std::cerr << "netlist error: " << e.what() << '\n';
    return exit_parse;
  }
  return exit_usage;
}
