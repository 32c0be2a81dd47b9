#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gate_kind.hpp"

namespace majmap
{

using NodeId = std::uint32_t;
inline constexpr NodeId invalid_node = ~NodeId{ 0 };

/*! \brief Why a node exists. Only `UserDFF` registers carry sequential state. */
enum class Origin : std::uint8_t
{
  UserLogic,
  UserDFF,
  BalancingDFF,
  InsertedSplitter,
  InsertedINV,
};

std::string_view origin_name( Origin o ) noexcept;
std::optional<Origin> origin_from_name( std::string_view name ) noexcept;

struct Node
{
  NodeId id{ invalid_node };
  GateKind kind{ GateKind::PI };
  Origin origin{ Origin::UserLogic };
  bool alive{ true };
  std::uint32_t level{ 0 };
  std::vector<NodeId> fanins;
  std::vector<NodeId> fanouts; // one entry per edge, so duplicates are possible
  std::string name;
};

/*! \brief True for input-netlist registers. Their D edge is sequential and is
 * ignored by levelization and ordering; their output starts a new stage at level 0. */
inline bool is_register( const Node& n ) noexcept
{
  return n.kind == GateKind::DFF && n.origin == Origin::UserDFF;
}

/*! \brief Directed gate graph with explicit PI and PO nodes.
 *
 * Node ids are never recycled. Removed nodes stay in the table with
 * `alive == false`, so caches keyed by id can be invalidated safely.
 * Every edge is stored on both endpoints.
 */
class Network
{
public:
  explicit Network( std::string name = {} ) : name_( std::move( name ) ) {}

  const std::string& name() const noexcept { return name_; }
  void set_name( std::string name ) { name_ = std::move( name ); }

  NodeId create_pi( std::string name );
  NodeId create_po( NodeId driver, std::string name );
  NodeId create_node( GateKind kind, std::span<const NodeId> fanins, Origin origin = Origin::UserLogic,
                      std::string name = {} );
  NodeId create_node( GateKind kind, std::initializer_list<NodeId> fanins, Origin origin = Origin::UserLogic,
                      std::string name = {} )
  {
    return create_node( kind, std::span<const NodeId>( fanins.begin(), fanins.size() ), origin, std::move( name ) );
  }

  /*! \brief Node with no fan-ins yet; the caller must attach them with add_fanin.
   * Used by readers to build registers that sit on feedback loops. */
  NodeId create_unwired( GateKind kind, Origin origin, std::string name );

  void add_fanin( NodeId consumer, NodeId driver );
  void set_fanin( NodeId consumer, std::size_t index, NodeId driver );
  /*! \brief Every consumer edge of `from` is moved to `to`. */
  void redirect_fanouts( NodeId from, NodeId to );
  /*! \brief Detach and kill a node that has no fan-outs. PIs and POs cannot be removed. */
  void remove_node( NodeId id );

  void set_kind( NodeId id, GateKind kind ) { at( id ).kind = kind; }
  void set_origin( NodeId id, Origin origin ) { at( id ).origin = origin; }
  void set_name( NodeId id, std::string name ) { at( id ).name = std::move( name ); }
  void set_level( NodeId id, std::uint32_t level ) { at( id ).level = level; }

  const Node& node( NodeId id ) const { return nodes_.at( id ); }
  bool alive( NodeId id ) const noexcept { return id < nodes_.size() && nodes_[id].alive; }
  std::uint32_t level( NodeId id ) const { return nodes_.at( id ).level; }
  GateKind kind( NodeId id ) const { return nodes_.at( id ).kind; }

  /*! \brief Number of ids ever issued. */
  std::size_t capacity() const noexcept { return nodes_.size(); }
  /*! \brief Number of live nodes, PIs and POs included. */
  std::size_t size() const noexcept { return live_; }

  const std::vector<NodeId>& pis() const noexcept { return pis_; }
  const std::vector<NodeId>& pos() const noexcept { return pos_; }
  std::vector<NodeId> registers() const;

  std::optional<NodeId> find_pi( std::string_view name ) const;
  std::optional<NodeId> find_po( std::string_view name ) const;
  /*! \brief First live non-PO node with this name. */
  std::optional<NodeId> find_node( std::string_view name ) const;

  template<class Fn>
  void foreach_node( Fn&& fn ) const
  {
    for ( const auto& n : nodes_ )
    {
      if ( n.alive )
        fn( n );
    }
  }

private:
  Node& at( NodeId id ) { return nodes_.at( id ); }
  NodeId push( GateKind kind, Origin origin, std::string name );

  std::string name_;
  std::vector<Node> nodes_;
  std::vector<NodeId> pis_;
  std::vector<NodeId> pos_;
  std::size_t live_{ 0 };
};

/*! \brief Nodes with fan-ins first; PIs and registers are sources. Throws structural_error on a cycle. */
std::vector<NodeId> topological_order( const Network& net );

/*! \brief Levels without touching the network (same rules as compute_levels). */
std::vector<std::uint32_t> levelize( const Network& net );

/*! \brief Levelize: PI and register 0, SP and PO copy their fan-in, clocked gates max + 1.
 * Levels are also stored on the nodes. */
std::vector<std::uint32_t> compute_levels( Network& net );

/*! \brief Edge symmetry, liveness of endpoints, arity and acyclicity. Throws structural_error. */
void check_consistency( const Network& net );

/*! \brief The non-SP node a (possibly splitter) node carries the value of. */
NodeId logical_driver( const Network& net, NodeId id );
std::vector<NodeId> logical_fanins( const Network& net, NodeId id );
/*! \brief Non-SP consumers reached through splitter trees, one entry per edge. */
std::vector<NodeId> logical_consumers( const Network& net, NodeId id );

/*! \brief Remove every node (transitively) whose fan-out is empty, except PIs, POs and registers. */
std::size_t remove_dead_nodes( Network& net );

/*! \brief Gate-level circuit over numbered leaves, to be spliced into a network. */
struct FragmentRef
{
  bool is_leaf{ true };
  std::uint32_t index{ 0 };

  bool operator==( const FragmentRef& ) const = default;
};

struct FragmentGate
{
  GateKind kind{ GateKind::AND2 };
  std::vector<FragmentRef> fanins;
};

struct Fragment
{
  std::uint32_t num_leaves{ 0 };
  std::vector<FragmentGate> gates; // fan-ins refer to leaves or earlier gates
  FragmentRef output;
};

struct ReplaceResult
{
  bool changed{ false };
  NodeId new_root{ invalid_node };
  std::size_t added{ 0 };
  std::size_t removed{ 0 };
};

/*! \brief Replace the cone rooted at `root` by `fragment`.
 *
 * `leaf_binding[i]` is the live node driving fragment leaf `i`. All fan-outs
 * of `root` move to the fragment output, then nodes left without fan-outs are
 * removed transitively and levels are recomputed. A single-gate fragment that
 * reproduces `root` exactly is a no-op. Throws structural_error when a binding
 * is dead, lies in `old_interior`, or would close a cycle.
 */
ReplaceResult replace_cone( Network& net, NodeId root, std::span<const NodeId> old_interior,
                            const Fragment& fragment, std::span<const NodeId> leaf_binding );

} // namespace majmap
