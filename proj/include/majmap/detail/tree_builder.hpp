#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace majmap::detail
{

template<class Op>
struct LeveledOperand
{
  Op op;
  std::uint32_t level{ 0 };
};

/*! \brief Combine operands into a tree of gates with at most `max_fanin` inputs.
 *
 * Greedy and level-aware: operands at the lowest effective level are grouped
 * first, widest group first. A lone operand at the lowest level is treated as
 * if it sat one level up (it would need a balancing DFF anyway), which lets it
 * join the next group instead of forcing an extra gate. `emit(ops)` must create
 * one gate over `ops` and return its handle; the returned level is
 * `max(input level) + 1`.
 */
template<class Op, class Emit>
LeveledOperand<Op> build_tree( std::vector<LeveledOperand<Op>> ops, std::uint32_t max_fanin, Emit&& emit )
{
  struct Item
  {
    Op op;
    std::uint32_t level;
    std::uint32_t effective;
    std::uint32_t seq;
  };
  std::vector<Item> items;
  std::uint32_t seq = 0;
  for ( auto& o : ops )
    items.push_back( Item{ o.op, o.level, o.level, seq++ } );
  if ( items.size() == 1 )
    return { items[0].op, items[0].level };

  auto make = [&]( std::vector<Item>& group ) {
    std::vector<Op> in;
    std::uint32_t lv = 0, eff = 0;
    for ( auto& g : group )
    {
      in.push_back( g.op );
      lv = std::max( lv, g.level );
      eff = std::max( eff, g.effective );
    }
    return Item{ emit( in ), lv + 1, eff + 1, seq++ };
  };

  while ( items.size() > max_fanin )
  {
    std::stable_sort( items.begin(), items.end(), []( const Item& a, const Item& b ) {
      return a.effective != b.effective ? a.effective < b.effective : a.seq < b.seq;
    } );
    std::size_t tied = 1;
    while ( tied < items.size() && items[tied].effective == items[0].effective )
      ++tied;
    if ( tied == 1 )
    {
      items[0].effective = items[1].effective;
      continue;
    }
    auto take = std::min<std::size_t>( tied, max_fanin );
    std::vector<Item> group( items.begin(), items.begin() + take );
    items.erase( items.begin(), items.begin() + take );
    items.push_back( make( group ) );
  }
  std::stable_sort( items.begin(), items.end(), []( const Item& a, const Item& b ) { return a.seq < b.seq; } );
  auto root = make( items );
  return { root.op, root.level };
}

} // namespace majmap::detail
