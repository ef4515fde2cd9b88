public class GroupsPaneKeyListener implements KeyListener {
  GroupFrame frame;
  GroupNode node;

  public void keyPressed(KeyEvent e) {
    if (e.isControlDown()) {
      switch (e.getKeyCode()) {
        case KeyEvent.VK_UP:
          frame.getGroupSelector().moveNodeUp(node);
          break;
        case KeyEvent.VK_DOWN:
          frame.getGroupSelector().moveNodeDown(node);
          break;
      }
    }
  }

  public void keyTyped(KeyEvent e) {
  }

  public void keyReleased(KeyEvent e) {
  }
}
